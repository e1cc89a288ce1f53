"""Truncated operator matrices in the orthonormal coefficient basis.

An operator T acting on a weighted coefficient space is represented by
its (N+1)x(N+1) matrix section T[m][n] = <T e_n, e_m>.  With e_n =
sqrt(kappa(n)) z^n, the column for T e_n with coefficient vector g is
g_m * sqrt(w(m)): row scaling by sqrt(w(m)), column scaling by
sqrt(kappa(n)).  For polynomial symbols every entry of the section is
exact; the section itself is still only a compression of the infinite
operator, so norms computed from it are lower bounds.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .series import TruncatedSeries, sup_norm_estimate
from .spaces import H22, SpaceWeights, norm_sq

__all__ = [
    "OperatorMatrix",
    "HsPartialSum",
    "multiplication_matrix",
    "composition_matrix",
    "weighted_composition_matrix",
    "adjoint",
    "hs_partial_sum",
    "hs_partial_curve",
    "operator_norm_estimate",
]

# sup-norm slack accepted before a symbol is flagged as not a self-map
_SELF_MAP_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Matrix section of an operator in the orthonormal basis of ``space``.

    ``safe_block`` is the largest index M such that comparisons restricted
    to entries m, n <= M are unaffected by the truncation policy (order
    minus the symbol degree for polynomial symbols, half the order when a
    symbol carries a tail note).
    """

    entries: np.ndarray
    space: SpaceWeights
    kind: str
    descriptor: str
    truncation_order: int
    safe_block: int

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.complex128)
        n = self.truncation_order + 1
        if arr.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix, got {arr.shape}")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("matrix entries must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def shape(self):
        return self.entries.shape


def _scales(space: SpaceWeights, order: int):
    sw = np.sqrt(space.weight_array(order))
    return sw, 1.0 / sw  # sqrt(w(m)), sqrt(kappa(n))


def _safe_block(order: int, *symbols: TruncatedSeries) -> int:
    if any(s.tail > 0.0 for s in symbols):
        return order // 2
    margin = max(s.order for s in symbols)
    return max(0, order - margin)


def multiplication_matrix(
    f: TruncatedSeries, order: int, space: SpaceWeights = H22
) -> OperatorMatrix:
    """Section of M_f: g -> f*g.  Entry (m, n) = f_{m-n} sqrt(w(m)/w(n)).

    Columns n > order - deg(f) lose part of f * z^n to the truncation;
    they sit outside ``safe_block``.
    """
    sw, sk = _scales(space, order)
    m = np.arange(order + 1)
    idx = m[:, None] - m[None, :]
    ok = (idx >= 0) & (idx <= f.order)
    fmat = np.zeros((order + 1, order + 1), dtype=np.complex128)
    fmat[ok] = f.coeffs[idx[ok]]
    return OperatorMatrix(
        entries=fmat * np.outer(sw, sk),
        space=space,
        kind="multiplication",
        descriptor=f"multiplication(symbol degree {f.order})",
        truncation_order=order,
        safe_block=_safe_block(order, f),
    )


def _power_columns(phi: TruncatedSeries, order: int) -> np.ndarray:
    """Column n = coefficients of phi^n truncated at ``order`` (exact window)."""
    cols = np.zeros((order + 1, order + 1), dtype=np.complex128)
    cur = np.zeros(order + 1, dtype=np.complex128)
    cur[0] = 1.0
    cols[:, 0] = cur
    for n in range(1, order + 1):
        cur = np.convolve(cur, phi.coeffs)[: order + 1]
        cols[:, n] = cur
    return cols


def composition_matrix(
    phi: TruncatedSeries, order: int, space: SpaceWeights = H22
) -> OperatorMatrix:
    """Section of C_phi: f -> f(phi).  Column n holds phi^n in the basis.

    Warns (but still builds, for exploration) when the sampled sup norm
    of phi exceeds 1, i.e. phi is not a disk self-map.
    """
    est = sup_norm_estimate(phi)
    if est.lower > 1.0 + _SELF_MAP_TOL:
        warnings.warn(
            f"composition symbol is not a self-map: sampled sup |phi| = {est.lower:g} > 1",
            stacklevel=2,
        )
    sw, sk = _scales(space, order)
    cols = _power_columns(phi, order)
    return OperatorMatrix(
        entries=cols * np.outer(sw, sk),
        space=space,
        kind="composition",
        descriptor=f"composition(symbol degree {phi.order})",
        truncation_order=order,
        safe_block=_safe_block(order, phi),
    )


def weighted_composition_matrix(
    psi: TruncatedSeries,
    phi: TruncatedSeries,
    order: int,
    space: SpaceWeights = H22,
) -> OperatorMatrix:
    """Section of f -> psi * f(phi): column n holds psi * phi^n in the basis."""
    est = sup_norm_estimate(phi)
    if est.lower > 1.0 + _SELF_MAP_TOL:
        warnings.warn(
            f"composition symbol is not a self-map: sampled sup |phi| = {est.lower:g} > 1",
            stacklevel=2,
        )
    sw, sk = _scales(space, order)
    cols = _power_columns(phi, order)
    for n in range(order + 1):
        cols[:, n] = np.convolve(cols[:, n], psi.coeffs)[: order + 1]
    return OperatorMatrix(
        entries=cols * np.outer(sw, sk),
        space=space,
        kind="weighted_composition",
        descriptor=(
            f"weighted_composition(weight degree {psi.order}, symbol degree {phi.order})"
        ),
        truncation_order=order,
        safe_block=_safe_block(order, psi, phi),
    )


def adjoint(t: OperatorMatrix) -> OperatorMatrix:
    """Conjugate transpose of the section."""
    return OperatorMatrix(
        entries=t.entries.conj().T,
        space=t.space,
        kind="adjoint",
        descriptor=f"formal-adjoint-of({t.descriptor})",
        truncation_order=t.truncation_order,
        safe_block=t.safe_block,
    )


@dataclass(frozen=True)
class HsPartialSum:
    """Partial Hilbert-Schmidt sum sum_{n<=N} |C_phi e_n|^2.

    ``analytic_bound`` is the closed-form cap
    1 + 2 |phi|_h22^2 (1 - |phi|_inf^2)^(-1), valid whenever phi is a
    strict self-map; the partial sums increase monotonically toward a
    limit below it.
    """

    partial: float
    n_terms: int
    analytic_bound: float


def hs_partial_curve(
    phi: TruncatedSeries, order: int, space: SpaceWeights = H22
) -> np.ndarray:
    """Cumulative partial sums [n=0], [n<=1], ..., [n<=order].

    Each term kappa(n) |phi^n|^2 uses the full-degree power of phi, so no
    norm mass is lost to truncation.
    """
    if phi.tail != 0.0:
        raise ValueError("Hilbert-Schmidt sums need an exact polynomial symbol")
    w_full = space.weight_array(max(phi.order, 1) * order)
    kap = space.kappa_array(order)
    partials = np.empty(order + 1)
    partials[0] = 1.0
    cur = np.ones(1, dtype=np.complex128)
    for n in range(1, order + 1):
        cur = np.convolve(cur, phi.coeffs)
        term = kap[n] * float(np.sum(w_full[: cur.size] * np.abs(cur) ** 2))
        partials[n] = partials[n - 1] + term
    return partials


def hs_partial_sum(
    phi: TruncatedSeries, order: int, space: SpaceWeights = H22
) -> HsPartialSum:
    """Partial HS sum for C_phi plus its analytic cap; needs sup |phi| < 1."""
    est = sup_norm_estimate(phi)
    if est.lower >= 1.0:
        raise ValueError(
            f"Hilbert-Schmidt sum needs sup |phi| < 1, sampled estimate {est.lower:g}"
        )
    partials = hs_partial_curve(phi, order, space)
    bound = 1.0 + 2.0 * norm_sq(phi, space) / (1.0 - est.lower**2)
    return HsPartialSum(
        partial=float(partials[-1]), n_terms=order + 1, analytic_bound=bound
    )


def operator_norm_estimate(
    t: OperatorMatrix, iters: int = 300, seed: int = 42, rtol: float = 1e-12
) -> float:
    """Largest singular value of the section via power iteration on T*T.

    Deterministic start vector from ``seed``; stops once the Rayleigh
    quotient settles to relative ``rtol``.  A lower bound for the norm of
    the full operator, non-decreasing in the truncation order.
    """
    if iters < 1:
        raise ValueError("iters must be >= 1")
    a = t.entries
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(a.shape[1]) + 1j * rng.standard_normal(a.shape[1])
    v /= np.linalg.norm(v)
    rho_prev = None
    rho = 0.0
    for _ in range(iters):
        u = a @ v
        w = a.conj().T @ u
        rho = float(np.real(np.vdot(v, w)))
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        if rho_prev is not None and abs(rho - rho_prev) <= rtol * abs(rho):
            break
        rho_prev = rho
    return float(np.sqrt(max(rho, 0.0)))

"""Complex-symmetry machinery for composition-type operators.

The conjugation J maps sum a_n z^n to sum conj(a_n) z^n.  It fixes the
orthonormal basis e_n, so an operator section is J-symmetric exactly when
the matrix equals its plain transpose (not its conjugate transpose).  The
equivalent function-level test is the kernel identity

    psi(z) K(phi(z) w) = psi(w) K(z phi(w)),   K(x) = sum kappa(n) x^n,

checked pointwise on a grid of disk pairs.  For a weighted composition
operator to pass, the symbols must take the one-parameter rational form

    phi = a0 + a1 q/p,   psi = a2 p,
    p(z) = (2/243) sum kappa(n) a0^n z^n,
    q(z) = (1/32) sum_{n>=1} n kappa(n) a0^(n-1) z^n,

whose quotient expands as q/p = sum c_i a0^(i-1) z^i with c_1 = 1 and the
later c_i independent of a0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .operators import OperatorMatrix
from .series import TruncatedSeries, divide, evaluate
from .spaces import H22, SpaceWeights

__all__ = [
    "apply_J",
    "symmetry_residual",
    "kernel_identity_residual",
    "default_grid",
    "build_p_q",
    "c_expansion",
    "SymbolParams",
    "symbols_from_params",
    "Z3wComparison",
    "z3w_coefficient_check",
]

# a2 = PSI_SCALE * psi(0): the kernel-identity normalization constant
# 3888 = 32 * 243/2 = 1/(kappa(0) * kappa(1)/2)
PSI_SCALE = 3888

_C_IMAG_TOL = 1e-12


def apply_J(f: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise complex conjugation; an antilinear involution."""
    return TruncatedSeries(np.conj(f.coeffs), tail=f.tail)


def symmetry_residual(t: OperatorMatrix, inner_block: int) -> float:
    """max |T[m][n] - T[n][m]| over m, n <= inner_block.

    Zero exactly when the section is J-symmetric on the block; the block
    must stay inside the truncation-safe region of the matrix.
    """
    if inner_block < 0:
        raise ValueError("inner_block must be non-negative")
    if inner_block > t.safe_block:
        raise ValueError(
            f"inner_block {inner_block} exceeds truncation-safe block {t.safe_block}"
        )
    b = t.entries[: inner_block + 1, : inner_block + 1]
    return float(np.max(np.abs(b - b.T)))


def default_grid(seed: int = 7, radius: float = 0.7, random_pairs: int = 50):
    """Reproducible disk-pair grid: 12x12 spiral tensor plus seeded random pairs.

    The spiral points combine 12 radii from 0.1 to ``radius`` with 12
    angles (the w spiral offset by half an angle step to avoid symmetric
    coincidences).
    """
    radii = np.linspace(0.1, radius, 12)
    ang = 2.0 * np.pi * np.arange(12) / 12.0
    zs = radii * np.exp(1j * ang)
    ws = radii * np.exp(1j * (ang + np.pi / 12.0))
    pairs = [(z, w) for z in zs for w in ws]
    rng = np.random.default_rng(seed)
    for _ in range(random_pairs):
        rz, rw = radius * np.sqrt(rng.random(2))
        tz, tw = 2.0 * np.pi * rng.random(2)
        pairs.append((rz * np.exp(1j * tz), rw * np.exp(1j * tw)))
    return pairs


def _kernel_sum(points: np.ndarray, trunc: int, space: SpaceWeights) -> np.ndarray:
    """K(x) = sum_{n<=trunc} kappa(n) x^n, vectorized over points."""
    return np.polynomial.polynomial.polyval(points, space.kappa_array(trunc))


def kernel_identity_residual(
    psi: TruncatedSeries,
    phi: TruncatedSeries,
    grid: Sequence[tuple[complex, complex]],
    kernel_trunc: int = 400,
    space: SpaceWeights = H22,
) -> float:
    """max over the grid of |psi(z) K(phi(z) w) - psi(w) K(z phi(w))|.

    Pointwise evaluation, so the test is exact up to the kernel truncation;
    with grid radii <= 0.7 and trunc = 400 the discarded kernel tail is far
    below double precision.  Rejects grid points outside the open disk and
    points where phi fails to map into it.
    """
    zs = np.array([z for z, _ in grid], dtype=np.complex128)
    ws = np.array([w for _, w in grid], dtype=np.complex128)
    if zs.size == 0:
        raise ValueError("empty evaluation grid")
    if np.max(np.abs(zs)) >= 1.0 or np.max(np.abs(ws)) >= 1.0:
        raise ValueError("grid points must lie strictly inside the unit disk")
    phi_z = evaluate(phi, zs)
    phi_w = evaluate(phi, ws)
    worst = max(float(np.max(np.abs(phi_z))), float(np.max(np.abs(phi_w))))
    if worst >= 1.0:
        raise ValueError(
            f"symbol leaves the unit disk on the grid: max |phi| = {worst:g}"
        )
    lhs = evaluate(psi, zs) * _kernel_sum(phi_z * ws, kernel_trunc, space)
    rhs = evaluate(psi, ws) * _kernel_sum(zs * phi_w, kernel_trunc, space)
    return float(np.max(np.abs(lhs - rhs)))


def build_p_q(a0: complex, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The canonical denominator/numerator pair for the rational symbols.

    p_n = (2/243) kappa(n) a0^n and q_n = (1/32) n kappa(n) a0^(n-1)
    (q_0 = 0).  Tail notes carry the geometric remainders, which vanish
    when a0 = 0 (only p_0 and q_1 survive).
    """
    a0 = complex(a0)
    r = abs(a0)
    if r >= 1.0:
        raise ValueError(f"parameter must satisfy |a0| < 1, got {r:g}")
    kap = H22.kappa_array(order)
    powers = np.ones(order + 1, dtype=np.complex128)
    if order > 0:
        powers[1:] = np.cumprod(np.full(order, a0))
    p = (2.0 / 243.0) * kap * powers
    n = np.arange(order + 1, dtype=np.float64)
    q = np.zeros(order + 1, dtype=np.complex128)
    if order > 0:
        q[1:] = (1.0 / 32.0) * n[1:] * kap[1:] * powers[:-1]
    if r == 0.0:
        p_tail = q_tail = 0.0
    else:
        # kappa is decreasing and n*kappa(n) <= 4/243 for n >= 1
        p_tail = (2.0 / 243.0) * float(H22.kappa(order + 1)) * r ** (order + 1) / (1 - r)
        q_tail = (1.0 / 32.0) * (4.0 / 243.0) * r**order / (1 - r)
    return TruncatedSeries(p, tail=p_tail), TruncatedSeries(q, tail=q_tail)


def c_expansion(a0: complex, count: int) -> np.ndarray:
    """Coefficients c_1..c_count of q/p = sum c_i a0^(i-1) z^i.

    The grading makes each c_i independent of a0 and real; extraction of
    c_i for i >= 2 divides by a0^(i-1), so a0 = 0 only supports count = 1.
    """
    a0 = complex(a0)
    if abs(a0) >= 1.0:
        raise ValueError(f"parameter must satisfy |a0| < 1, got {abs(a0):g}")
    if count < 1:
        raise ValueError("count must be >= 1")
    if a0 == 0:
        if count > 1:
            raise ValueError("c_i with i >= 2 are indeterminate at a0 = 0")
        return np.array([1.0])
    p, q = build_p_q(a0, count)
    h = divide(q, p, count)
    powers = np.concatenate(([1.0 + 0j], np.cumprod(np.full(count - 1, a0))))
    c = h.coeffs[1:] / powers
    worst = float(np.max(np.abs(c.imag)))
    if worst > _C_IMAG_TOL:
        raise ValueError(
            f"expansion coefficients should be real; residual imaginary part {worst:g}"
        )
    return c.real.copy()


@dataclass(frozen=True)
class SymbolParams:
    """Scalar data (a0, a1, a2) determining a candidate symbol pair.

    a0 = phi(0), a1 = phi'(0), a2 = 3888 * psi(0); ``c`` caches the
    quotient-expansion coefficients (c_1 = 1; empty beyond the first when
    a0 = 0 since they are then indeterminate).
    """

    a0: complex
    a1: complex
    a2: complex
    c: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if abs(self.a0) >= 1.0:
            raise ValueError(f"parameter must satisfy |a0| < 1, got {abs(self.a0):g}")
        if self.c is None:
            object.__setattr__(self, "c", np.array([1.0]))

    @classmethod
    def make(cls, a0: complex, a1: complex, a2: complex, n_coeffs: int = 8) -> "SymbolParams":
        a0 = complex(a0)
        c = c_expansion(a0, 1 if a0 == 0 else n_coeffs)
        return cls(a0=a0, a1=complex(a1), a2=complex(a2), c=c)

    @property
    def psi_at_zero(self) -> complex:
        return self.a2 / PSI_SCALE


def symbols_from_params(
    params: SymbolParams, order: int
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Materialize phi = a0 + a1 q/p and psi = a2 p as truncated series.

    phi(0) = a0 and phi'(0) = a1 are recovered exactly (c_1 = 1).  The phi
    tail note uses the tested bound 0 < c_i < 1 on the quotient
    coefficients.
    """
    p, q = build_p_q(params.a0, order)
    h = divide(q, p, order)
    phi_coeffs = params.a1 * h.coeffs
    phi_coeffs[0] = params.a0
    r = abs(params.a0)
    phi_tail = 0.0 if r == 0.0 else abs(params.a1) * r**order / (1.0 - r)
    phi = TruncatedSeries(phi_coeffs, tail=phi_tail)
    psi = TruncatedSeries(params.a2 * p.coeffs, tail=abs(params.a2) * p.tail)
    return phi, psi


class Z3wComparison(NamedTuple):
    """Both sides' z^3 w coefficients of the kernel identity, common factors removed."""

    lhs: complex
    rhs: complex


def z3w_coefficient_check(a0: complex, a1: complex) -> Z3wComparison:
    """Compare the z^3 w coefficients of the two sides of the kernel identity.

    lhs = kappa(1) [kappa(3) a0^4 + a0^2 a1 (kappa(2) c1 + kappa(1) c2 + kappa(0) c3)]
    rhs = kappa(3) [kappa(1) a0^4 + 3 kappa(0) a0^2 a1 c1]

    Every term carries a0^2, so both sides vanish at a0 = 0.  Substituting
    the triangular-solve values of c2 and c3 collapses lhs - rhs to zero
    identically, in exact arithmetic, for every (a0, a1): this probe does
    not discriminate (the z^3 w^2 coefficient is the first that does).
    """
    a0 = complex(a0)
    a1 = complex(a1)
    if abs(a0) >= 1.0:
        raise ValueError(f"parameter must satisfy |a0| < 1, got {abs(a0):g}")
    if a0 == 0:
        return Z3wComparison(0j, 0j)
    c1, c2, c3 = c_expansion(a0, 3)
    k0, k1, k2, k3 = 1.0 / 32.0, 2.0 / 243.0, 3.0 / 1024.0, 4.0 / 3125.0
    lhs = k1 * (k3 * a0**4 + a0**2 * a1 * (k2 * c1 + k1 * c2 + k0 * c3))
    rhs = k3 * (k1 * a0**4 + 3.0 * k0 * a0**2 * a1 * c1)
    return Z3wComparison(lhs, rhs)

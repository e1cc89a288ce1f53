"""Truncated power-series arithmetic on the unit disk.

A series is a finite complex coefficient vector a_0..a_N standing for
sum a_n z^n.  Truncation at order N only ever discards degrees > N --
higher-order terms never feed back into lower ones -- so sums, products,
powers and quotients of polynomials are exact on the retained window.

When a series stands in for an infinite one, the optional ``tail`` field
carries an l1 bound on the discarded coefficients (sum |a_n| over n > N).
The arithmetic propagates that bound conservatively; it is 0 for genuine
polynomials and for every operation that stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "TruncatedSeries",
    "SeriesOpConfig",
    "SupNormEstimate",
    "evaluate",
    "linear_combine",
    "cauchy_product",
    "differentiate",
    "power",
    "compose",
    "divide",
    "sup_norm_estimate",
]

# iterated multiplication below this exponent, square-and-multiply above
_POW_SQUARING_THRESHOLD = 8


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Degree-truncated power series sum_{n<=order} coeffs[n] * z^n."""

    coeffs: np.ndarray
    tail: float = 0.0

    def __post_init__(self):
        arr = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d vector")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("series coefficients must be finite")
        tail = float(self.tail)
        if not (tail >= 0.0 and np.isfinite(tail)):
            raise ValueError("tail bound must be finite and non-negative")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "tail", tail)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def coefficient(self, n: int) -> complex:
        """Coefficient of z^n; zero beyond the truncation order."""
        if 0 <= n <= self.order:
            return complex(self.coeffs[n])
        return 0j

    def coeff_l1(self) -> float:
        return float(np.sum(np.abs(self.coeffs)))

    def truncated(self, order: int) -> "TruncatedSeries":
        """Cut to the given order, folding dropped mass into the tail note."""
        if order >= self.order:
            return self
        dropped = float(np.sum(np.abs(self.coeffs[order + 1 :])))
        return TruncatedSeries(self.coeffs[: order + 1], tail=self.tail + dropped)

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self):
        head = np.array2string(self.coeffs[: min(4, self.coeffs.size)], precision=6)
        more = "..." if self.coeffs.size > 4 else ""
        return f"TruncatedSeries(order={self.order}, coeffs={head}{more}, tail={self.tail:g})"

    @classmethod
    def from_coeffs(cls, coeffs, tail: float = 0.0) -> "TruncatedSeries":
        return cls(np.asarray(coeffs, dtype=np.complex128), tail=tail)

    @classmethod
    def zero(cls, order: int = 0) -> "TruncatedSeries":
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def one(cls) -> "TruncatedSeries":
        return cls(np.ones(1, dtype=np.complex128))

    @classmethod
    def monomial(cls, degree: int, coefficient: complex = 1.0) -> "TruncatedSeries":
        c = np.zeros(degree + 1, dtype=np.complex128)
        c[degree] = coefficient
        return cls(c)


@dataclass(frozen=True)
class SeriesOpConfig:
    """Knobs for series operations that need a sampling or truncation policy."""

    truncation_order: int = 128
    circle_samples: int = 4096
    radius: float = 1.0

    def __post_init__(self):
        if self.truncation_order < 0:
            raise ValueError("truncation_order must be >= 0")
        if self.circle_samples < 16:
            raise ValueError("circle_samples must be >= 16")
        if not (0.0 < self.radius <= 1.0):
            raise ValueError("radius must lie in (0, 1]")


@dataclass(frozen=True)
class SupNormEstimate:
    """Two-sided bracket for the boundary sup norm.

    ``lower`` is the max of |f| over the sampled circle (a rigorous lower
    bound); ``upper`` is the coefficient l1 sum plus any declared tail
    (a rigorous upper bound on the whole closed disk).
    """

    lower: float
    upper: float


def evaluate(f: TruncatedSeries, z):
    """Partial-sum value sum_{n<=order} a_n z^n (Horner; vectorized in z)."""
    return np.polynomial.polynomial.polyval(z, f.coeffs)


def linear_combine(alpha, f: TruncatedSeries, beta, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise alpha*f + beta*g, order max(orders)."""
    n = max(f.order, g.order) + 1
    out = np.zeros(n, dtype=np.complex128)
    out[: f.order + 1] = alpha * f.coeffs
    out[: g.order + 1] += beta * g.coeffs
    return TruncatedSeries(out, tail=abs(alpha) * f.tail + abs(beta) * g.tail)


def cauchy_product(f: TruncatedSeries, g: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Convolution product truncated at ``order`` (full degree when omitted).

    Retained coefficients are exact; dropped high-degree mass and the
    cross terms against declared tails go into the result's tail note.
    """
    full = np.convolve(f.coeffs, g.coeffs)
    if order is None:
        order = full.size - 1
    dropped = float(np.sum(np.abs(full[order + 1 :])))
    out = np.zeros(order + 1, dtype=np.complex128)
    keep = min(order + 1, full.size)
    out[:keep] = full[:keep]
    tail = f.tail * (g.coeff_l1() + g.tail) + g.tail * f.coeff_l1() + dropped
    return TruncatedSeries(out, tail=tail)


def differentiate(f: TruncatedSeries, k: int = 1) -> TruncatedSeries:
    """Term-wise derivative of order k in {1, 2}; requires an exact series."""
    if k not in (1, 2):
        raise ValueError("derivative order must be 1 or 2")
    if f.tail != 0.0:
        raise ValueError("cannot differentiate a series with an undetermined tail")
    cur = f.coeffs
    for _ in range(k):
        if cur.size <= 1:
            cur = np.zeros(1, dtype=np.complex128)
        else:
            cur = cur[1:] * np.arange(1, cur.size)
    return TruncatedSeries(cur)


def power(phi: TruncatedSeries, n: int, order: int | None = None) -> TruncatedSeries:
    """phi**n truncated at ``order``; square-and-multiply above n = 8."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    if n == 0:
        return TruncatedSeries.one()
    if order is None:
        order = max(phi.order, 1) * n
    if n <= _POW_SQUARING_THRESHOLD:
        out = phi.truncated(order)
        for _ in range(n - 1):
            out = cauchy_product(out, phi, order)
        return out
    half = power(phi, n // 2, order)
    out = cauchy_product(half, half, order)
    if n % 2:
        out = cauchy_product(out, phi, order)
    return out


def compose(
    f: TruncatedSeries,
    phi: TruncatedSeries,
    order: int | None = None,
    tail_tol: float = 1e-9,
) -> TruncatedSeries:
    """f(phi(z)) truncated at ``order``, by Horner over f's coefficients.

    Every retained coefficient of f participates, so the window is exact
    for polynomial f.  When f carries a tail note, the unknown terms
    a_k phi^k with k > f.order are bounded by tail * s^(order+1) with
    s = coefficient-sum bound on |phi|; composition is rejected when that
    bound cannot be formed (s >= 1) or exceeds ``tail_tol``.  With
    phi(0) = 0 the unknown terms cannot reach degrees <= f.order, so a
    window no wider than f.order stays exact.
    """
    if order is None:
        order = f.order * max(phi.order, 1)
    unknown = 0.0
    if f.tail > 0.0:
        reaches_window = phi.coefficient(0) != 0 or f.order < order
        if reaches_window:
            s = phi.coeff_l1() + phi.tail
            if s >= 1.0:
                raise ValueError(
                    "composition tail bound diverges: |phi| bound "
                    f"{s:g} >= 1 with undetermined input tail {f.tail:g}"
                )
            unknown = f.tail * s ** (f.order + 1)
            if unknown > tail_tol:
                raise ValueError(
                    f"composition tail bound {unknown:g} exceeds tolerance {tail_tol:g}"
                )
    out = TruncatedSeries(f.coeffs[-1:])
    for k in range(f.order - 1, -1, -1):
        out = cauchy_product(out, phi, order)
        out = linear_combine(1.0, out, 1.0, TruncatedSeries(f.coeffs[k : k + 1]))
    return TruncatedSeries(out.coeffs, tail=out.tail + unknown)


def divide(q: TruncatedSeries, p: TruncatedSeries, order: int) -> TruncatedSeries:
    """Series quotient h with h*p = q through degree ``order``.

    Standard triangular solve h_k = (q_k - sum_{j<k} h_j p_{k-j}) / p_0;
    coefficients of the quotient window depend only on the input windows,
    so input tail notes are irrelevant here and are not propagated.
    """
    p0 = p.coefficient(0)
    if p0 == 0:
        raise ValueError("division singularity: p(0) = 0")
    h = np.zeros(order + 1, dtype=np.complex128)
    pc = p.coeffs
    for k in range(order + 1):
        acc = q.coefficient(k)
        lo = max(0, k - (pc.size - 1))
        if lo < k:
            acc -= np.dot(h[lo:k], pc[k - lo : 0 : -1])
        h[k] = acc / p0
    return TruncatedSeries(h)


def sup_norm_estimate(f: TruncatedSeries, cfg: SeriesOpConfig | None = None) -> SupNormEstimate:
    """Bracket the sup norm by sampling |f| on the circle of cfg.radius.

    Samples sit at the M-th roots of unity scaled by the radius; the
    values are computed exactly by folding the coefficients modulo M and
    taking one FFT, so ``lower`` is monotone along refinements M | M'.
    """
    if cfg is None:
        cfg = SeriesOpConfig()
    m = cfg.circle_samples
    scaled = f.coeffs
    if cfg.radius != 1.0:
        scaled = scaled * cfg.radius ** np.arange(f.order + 1)
    folded = np.zeros(m, dtype=np.complex128)
    for start in range(0, scaled.size, m):
        chunk = scaled[start : start + m]
        folded[: chunk.size] += chunk
    values = np.fft.fft(folded)
    lower = float(np.max(np.abs(values)))
    upper = f.coeff_l1() + f.tail
    return SupNormEstimate(lower=lower, upper=upper)

"""Weighted coefficient Hilbert spaces of analytic functions on the disk.

Each space is determined by a positive weight sequence w(n) on Taylor
coefficients: <f, g> = sum w(n) a_n conj(b_n).  Four families are built in:

    hardy    w(n) = 1
    bergman  w(n) = 1/(n+1)
    h21      w(n) = (n+2)^3/(n+1)
    h22      w(n) = (n+2)^5/(n+1)

The h22 weight is equivalently the six-part derivative norm

    31|f|_H2^2 + 41|f'|_H2^2 + |f''|_H2^2 + |f|_A2^2 + 49|f'|_A2^2 + 11|f''|_A2^2,

which rests on the integer identity
(n+2)^5 = (n+1)(31 + 49n + 41n^2 + 11n^2(n-1) + n^2(n-1)^2) + 1.

Weights are exact rationals (fractions.Fraction) converted to doubles on
demand, so identity checks carry no float error.  The reproducing kernel
of a family is K_w(z) = sum kappa(n) (conj(w) z)^n with kappa = 1/w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .series import TruncatedSeries, evaluate

__all__ = [
    "SpaceWeights",
    "HARDY",
    "BERGMAN",
    "H21",
    "H22",
    "SPACES",
    "space_by_name",
    "inner_product",
    "norm_sq",
    "norm",
    "NormComponents",
    "norm_sq_components",
    "basis_vector",
    "gram_matrix",
    "kernel_series",
    "default_kernel_order",
    "evaluate",
]


@dataclass(frozen=True)
class SpaceWeights:
    """Coefficient weight family w(n) > 0 with kernel coefficients 1/w(n).

    ``power`` selects the closed form w(n) = (n+2)^power/(n+1); None is
    the flat Hardy weight.
    """

    name: str
    power: int | None

    def weight(self, n: int) -> Fraction:
        """Exact rational w(n)."""
        if n < 0:
            raise ValueError("weight index must be non-negative")
        if self.power is None:
            return Fraction(1)
        return Fraction((n + 2) ** self.power, n + 1)

    def kappa(self, n: int) -> Fraction:
        """Exact rational kernel coefficient 1/w(n)."""
        return 1 / self.weight(n)

    def weight_array(self, order: int) -> np.ndarray:
        n = np.arange(order + 1, dtype=np.float64)
        if self.power is None:
            return np.ones(order + 1)
        return (n + 2.0) ** self.power / (n + 1.0)

    def kappa_array(self, order: int) -> np.ndarray:
        return 1.0 / self.weight_array(order)

    def basis_scale_array(self, order: int) -> np.ndarray:
        """sqrt(kappa(n)): the scalars making e_n = sqrt(kappa(n)) z^n unit vectors."""
        return np.sqrt(self.kappa_array(order))


HARDY = SpaceWeights("hardy", None)
BERGMAN = SpaceWeights("bergman", 0)
H21 = SpaceWeights("h21", 3)
H22 = SpaceWeights("h22", 5)

SPACES = {s.name: s for s in (HARDY, BERGMAN, H21, H22)}


def space_by_name(name: str) -> SpaceWeights:
    try:
        return SPACES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown space {name!r}; choose from {sorted(SPACES)}") from None


def inner_product(f: TruncatedSeries, g: TruncatedSeries, space: SpaceWeights = H22) -> complex:
    """sum w(n) a_n conj(b_n); the shorter series is zero-extended."""
    n = min(f.order, g.order) + 1
    w = space.weight_array(n - 1)
    return complex(np.sum(w * f.coeffs[:n] * np.conj(g.coeffs[:n])))


def norm_sq(f: TruncatedSeries, space: SpaceWeights = H22) -> float:
    n = f.order + 1
    w = space.weight_array(n - 1)
    return float(np.sum(w * np.abs(f.coeffs[:n]) ** 2))


def norm(f: TruncatedSeries, space: SpaceWeights = H22) -> float:
    return float(np.sqrt(norm_sq(f, space)))


@dataclass(frozen=True)
class NormComponents:
    """The six weighted derivative terms of the h22 norm, multipliers included."""

    hardy: float          # 31 |f|_H2^2
    hardy_d1: float       # 41 |f'|_H2^2
    hardy_d2: float       #    |f''|_H2^2
    bergman: float        #    |f|_A2^2
    bergman_d1: float     # 49 |f'|_A2^2
    bergman_d2: float     # 11 |f''|_A2^2

    @property
    def total(self) -> float:
        return (self.hardy + self.hardy_d1 + self.hardy_d2
                + self.bergman + self.bergman_d1 + self.bergman_d2)

    def as_tuple(self):
        return (self.hardy, self.hardy_d1, self.hardy_d2,
                self.bergman, self.bergman_d1, self.bergman_d2)


def norm_sq_components(f: TruncatedSeries) -> NormComponents:
    """Six-part breakdown of the h22 norm; total equals norm_sq(f, H22)."""
    n = np.arange(f.order + 1, dtype=np.float64)
    a2 = np.abs(f.coeffs) ** 2
    return NormComponents(
        hardy=float(31.0 * np.sum(a2)),
        hardy_d1=float(41.0 * np.sum(n**2 * a2)),
        hardy_d2=float(np.sum(n**2 * (n - 1) ** 2 * a2)),
        bergman=float(np.sum(a2 / (n + 1.0))),
        bergman_d1=float(49.0 * np.sum(n * a2)),
        bergman_d2=float(11.0 * np.sum(n**2 * (n - 1) * a2)),
    )


def basis_vector(n: int, space: SpaceWeights = H22) -> TruncatedSeries:
    """Orthonormal basis element e_n = sqrt(kappa(n)) z^n."""
    return TruncatedSeries.monomial(n, float(np.sqrt(float(space.kappa(n)))))


def gram_matrix(order: int, space: SpaceWeights = H22) -> np.ndarray:
    """Gram matrix <e_n, e_m> for n, m <= order (identity up to rounding)."""
    g = np.empty((order + 1, order + 1), dtype=np.complex128)
    basis = [basis_vector(n, space) for n in range(order + 1)]
    for i in range(order + 1):
        for j in range(order + 1):
            g[i, j] = inner_product(basis[j], basis[i], space)
    return g


def default_kernel_order(w_point: complex, space: SpaceWeights = H22, tol: float = 1e-15) -> int:
    """Smallest order whose kernel tail sum kappa(n)|w|^2n drops below tol.

    Uses the geometric bound kappa(N+1) |w|^(2(N+1)) / (1 - |w|^2); kappa
    is non-increasing for all built-in families.
    """
    r2 = abs(w_point) ** 2
    if r2 == 0.0:
        return 0
    n = 0
    while float(space.kappa(n + 1)) * r2 ** (n + 1) / (1.0 - r2) >= tol:
        n += 1
    return n


def kernel_series(
    w_point: complex,
    order: int | None = None,
    space: SpaceWeights = H22,
    tol: float = 1e-15,
) -> TruncatedSeries:
    """Reproducing kernel K_w truncated: coefficient n is kappa(n) conj(w)^n.

    Requires |w| < 1.  The default order makes the discarded part of
    |K_w|^2 smaller than ``tol``; the tail note records the exact-geometry
    l1 bound on the dropped coefficients.
    """
    w_point = complex(w_point)
    r = abs(w_point)
    if r >= 1.0:
        raise ValueError(f"kernel point must satisfy |w| < 1, got |w| = {r:g}")
    if order is None:
        order = default_kernel_order(w_point, space, tol)
    powers = np.ones(order + 1, dtype=np.complex128)
    if order > 0:
        powers[1:] = np.cumprod(np.full(order, np.conj(w_point)))
    coeffs = space.kappa_array(order) * powers
    if r == 0.0:
        tail = 0.0
    else:
        tail = float(space.kappa(order + 1)) * r ** (order + 1) / (1.0 - r)
    return TruncatedSeries(coeffs, tail=tail)

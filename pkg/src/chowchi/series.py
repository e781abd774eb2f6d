"""Truncated formal power series with exact integer coefficients.

A series is a coefficient vector c_0 .. c_N together with its explicit
truncation order N; all arithmetic happens modulo t^(N+1).  Mixing orders is
rejected rather than silently re-truncated, so coefficient comparisons stay
unambiguous.  Values are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomials import binomial

__all__ = [
    "TruncatedSeries",
    "series_geom_pow",
    "series_mul",
    "series_coefficient",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0 .. c_order of a formal power series in t.

    Equality is coefficientwise and holds only between series of equal order.

    >>> TruncatedSeries([1, 2, 3]).order
    2
    >>> TruncatedSeries([1, 2, 3]) == TruncatedSeries([1, 2, 3, 0])
    False
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series carries at least its constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        """Truncation degree N; the series has N + 1 coefficients."""
        return len(self.coeffs) - 1


def series_geom_pow(m: int, order: int) -> TruncatedSeries:
    """Expansion of (1/(1-t))^m truncated at ``order``.

    The coefficient of t^d is C(m + d - 1, d), taken straight from the Pascal
    table; no series inversion is involved.  For m = 0 the result is the
    constant series 1.

    >>> series_geom_pow(2, 3).coeffs
    (1, 2, 3, 4)
    >>> series_geom_pow(0, 2).coeffs
    (1, 0, 0)
    >>> series_geom_pow(6, 2).coeffs
    (1, 6, 21)
    """
    if m < 0:
        raise ValueError(f"exponent must be nonnegative, got {m}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs = [1]
    for d in range(1, order + 1):
        coeffs.append(binomial(m + d - 1, d))
    return TruncatedSeries(tuple(coeffs))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product of two series of the same order, truncated there.

    >>> one = TruncatedSeries([1, 0, 0])
    >>> series_mul(one, TruncatedSeries([1, 5, 9])).coeffs
    (1, 5, 9)
    """
    if a.order != b.order:
        raise ValueError(f"series order mismatch: {a.order} != {b.order}")
    ca, cb = a.coeffs, b.coeffs
    out = [
        sum(ca[i] * cb[d - i] for i in range(d + 1))
        for d in range(a.order + 1)
    ]
    return TruncatedSeries(tuple(out))


def series_coefficient(s: TruncatedSeries, d: int) -> int:
    """The coefficient of t^d; ``d`` must lie within the truncation order.

    >>> series_coefficient(TruncatedSeries([1, 2, 3]), 1)
    2
    """
    if d < 0 or d > s.order:
        raise ValueError(f"degree {d} outside series order {s.order}")
    return s.coeffs[d]

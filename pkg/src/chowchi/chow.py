"""Euler characteristics of the cycle spaces C_{p,d}(P^n).

C_{p,d}(P^n) is the Chow variety of effective algebraic p-cycles of degree d
in complex projective n-space.  Its Euler characteristic is computed here by
three routes that share nothing beyond the binomial primitive:

* ``chow_euler_closed``: the Lawson-Yau formula C(v + d - 1, d) with
  v = C(n+1, p+1);
* ``chow_euler_recursive``: a memoized recursion that descends in the
  ambient dimension, seeded only by the three stated base cases;
* ``chow_series`` (functional method): coefficients of the generating
  function Q_{p,n}(t), built strictly from the product recurrence
  Q_{p+1,n+1} = Q_{p+1,n} * Q_{p,n}.

Agreement of the three over a parameter grid is the package's central
self-check (see :mod:`chowchi.verify`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .binomials import binomial
from .series import TruncatedSeries, series_coefficient, series_geom_pow, series_mul

__all__ = [
    "ChowParams",
    "EulerValue",
    "METHOD_CLOSED",
    "METHOD_RECURSIVE",
    "METHOD_SERIES",
    "SERIES_CLOSED",
    "SERIES_FUNCTIONAL",
    "v_pn",
    "chow_euler_closed",
    "chow_euler_recursive",
    "chow_euler_series",
    "points_euler_recursive",
    "chow_series",
    "divisor_check",
]

METHOD_CLOSED = "closed"
METHOD_RECURSIVE = "recursive"
METHOD_SERIES = "series"

SERIES_CLOSED = "closed"
SERIES_FUNCTIONAL = "functional"


@dataclass(frozen=True)
class ChowParams:
    """The triple (p, n, d) indexing the cycle space C_{p,d}(P^n).

    p is the cycle dimension, n the ambient projective dimension, d the
    degree; validity means 0 <= p <= n and d >= 0.
    """

    p: int
    n: int
    d: int

    def __post_init__(self):
        if not 0 <= self.p <= self.n:
            raise ValueError(f"require 0 <= p <= n, got p={self.p}, n={self.n}")
        if self.d < 0:
            raise ValueError(f"degree must be nonnegative, got d={self.d}")


@dataclass(frozen=True)
class EulerValue:
    """An Euler characteristic together with the route that produced it."""

    chi: int
    method: str


def v_pn(p: int, n: int) -> int:
    """The exponent v = C(n+1, p+1) attached to C_{p,d}(P^n).

    >>> v_pn(0, 1)
    2
    >>> v_pn(1, 3)
    6
    >>> v_pn(4, 4)
    1
    """
    if not 0 <= p <= n:
        raise ValueError(f"require 0 <= p <= n, got p={p}, n={n}")
    return binomial(n + 1, p + 1)


def chow_euler_closed(params: ChowParams) -> EulerValue:
    """chi(C_{p,d}(P^n)) by the Lawson-Yau closed form C(v + d - 1, d).

    The identical number is the l-adic Euler-Poincare characteristic of the
    cycle space over any algebraically closed field, so this one function
    serves both readings; there is no separate l-adic code path.

    >>> chow_euler_closed(ChowParams(0, 2, 2)).chi
    6
    >>> chow_euler_closed(ChowParams(3, 3, 9)).chi   # one cycle per degree
    1
    """
    chi = binomial(v_pn(params.p, params.n) + params.d - 1, params.d)
    return EulerValue(chi, METHOD_CLOSED)


@cache
def _chi_recursive(p: int, n: int, d: int) -> int:
    # Base cases, and nothing derived from the closed form: degree zero,
    # the unique degree-d cycle when p == n, and 0-cycles (symmetric products).
    if d == 0 or p == n:
        return 1
    if p == 0:
        return binomial(n + d, d)
    m = n - 1   # the recursion descends in the ambient dimension
    return _chi_recursive(p - 1, m, d) + sum(
        _chi_recursive(p, m, i) * _chi_recursive(p - 1, m, d - i)
        for i in range(1, d + 1)
    )


def chow_euler_recursive(params: ChowParams) -> EulerValue:
    """chi(C_{p,d}(P^n)) by the suspension recursion

        chi(C_{p+1,d}(P^{n+1})) = chi(C_{p,d}(P^n))
            + sum_{i=1}^{d} chi(C_{p+1,i}(P^n)) * chi(C_{p,d-i}(P^n)),

    memoized on (p, n, d).  Only three base cases are used (d = 0, p = n,
    and the 0-cycle count C(n+d, d)), so agreement with ``chow_euler_closed``
    is a genuine cross-check rather than a tautology.

    >>> chow_euler_recursive(ChowParams(1, 2, 2)).chi
    6
    >>> chow_euler_recursive(ChowParams(2, 2, 7)).chi
    1
    """
    return EulerValue(_chi_recursive(params.p, params.n, params.d), METHOD_RECURSIVE)


@cache
def _chi_points(n: int, d: int) -> int:
    if n == 0 or d == 0:
        return 1
    return 1 + sum(_chi_points(n - 1, i) for i in range(1, d + 1))


def points_euler_recursive(n: int, d: int) -> int:
    """chi(C_{0,d}(P^n)) from the inner recursion

        chi(C_{0,d}(P^{n+1})) = 1 + sum_{i=1}^{d} chi(C_{0,i}(P^n)),

    with base chi(C_{0,d}(P^0)) = 1 (a point carries one cycle per degree).
    This never touches the binomial table, making it an independent oracle
    for the 0-cycle value C(n+d, d).

    >>> points_euler_recursive(0, 5)
    1
    >>> points_euler_recursive(1, 3)
    4
    >>> points_euler_recursive(3, 2)
    10
    """
    if n < 0 or d < 0:
        raise ValueError(f"require n >= 0 and d >= 0, got n={n}, d={d}")
    return _chi_points(n, d)


@cache
def _q_functional(p: int, n: int, order: int) -> TruncatedSeries:
    if p == 0:
        return series_geom_pow(n + 1, order)   # Q_{0,m} = (1/(1-t))^{m+1}
    if p == n:
        return series_geom_pow(1, order)       # Q_{q,q} = 1/(1-t)
    return series_mul(
        _q_functional(p, n - 1, order),
        _q_functional(p - 1, n - 1, order),
    )


def chow_series(p: int, n: int, order: int, method: str = SERIES_CLOSED) -> TruncatedSeries:
    """The generating function Q_{p,n}(t) = sum_d chi(C_{p,d}(P^n)) t^d, truncated.

    With method ``"closed"`` this expands (1/(1-t))^v directly.  With method
    ``"functional"`` the series is built strictly from the recurrence
    Q_{p+1,n+1} = Q_{p+1,n} * Q_{p,n} with initial values Q_{0,m} =
    (1/(1-t))^{m+1} and Q_{q,q} = 1/(1-t), never invoking the closed form,
    so the two methods verify each other coefficient by coefficient.

    >>> chow_series(0, 1, 3).coeffs
    (1, 2, 3, 4)
    >>> chow_series(2, 2, 4, method="functional").coeffs
    (1, 1, 1, 1, 1)
    >>> chow_series(1, 2, 2, method="functional").coeffs
    (1, 3, 6)
    """
    if not 0 <= p <= n:
        raise ValueError(f"require 0 <= p <= n, got p={p}, n={n}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if method == SERIES_CLOSED:
        return series_geom_pow(v_pn(p, n), order)
    if method == SERIES_FUNCTIONAL:
        return _q_functional(p, n, order)
    raise ValueError(f"unknown series method {method!r}")


def chow_euler_series(params: ChowParams, order: int | None = None) -> EulerValue:
    """chi(C_{p,d}(P^n)) read off as a functional-equation series coefficient.

    The third independent route: the degree-d coefficient of the series built
    by ``chow_series(..., method="functional")``.  ``order`` defaults to the
    degree itself and must not be smaller.

    >>> chow_euler_series(ChowParams(1, 3, 2)).chi
    21
    """
    if order is None:
        order = params.d
    if order < params.d:
        raise ValueError(f"order {order} is below degree {params.d}")
    s = chow_series(params.p, params.n, order, SERIES_FUNCTIONAL)
    return EulerValue(series_coefficient(s, params.d), METHOD_SERIES)


def divisor_check(p: int, d: int) -> int:
    """chi(C_{p,d}(P^{p+1})) = C(p+d+1, d), the divisor-space value.

    Degree-d hypersurfaces in P^{p+1} form a projective space of dimension
    C(p+d+1, d) - 1 (one homogeneous coordinate per degree-d monomial in
    p + 2 variables), whence the count.  Callers may assert equality with
    ``chow_euler_closed`` on (p, p+1, d).

    >>> divisor_check(1, 2)    # conics in the plane form a P^5
    6
    >>> divisor_check(2, 3)
    20
    """
    if p < 0 or d < 0:
        raise ValueError(f"require p >= 0 and d >= 0, got p={p}, d={d}")
    return binomial(p + d + 1, d)

"""Parameter-sweep consistency suites with machine-readable reports.

Each suite recomputes a family of exact identities by two routes and records
every disagreement; an empty failure list is the pass condition.  The CLI
surfaces these as ``chowchi verify``, and the sweep sizes are chosen so the
full run finishes in seconds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from .binomials import binomial, binomial_signed
from .chow import (
    ChowParams,
    SERIES_CLOSED,
    SERIES_FUNCTIONAL,
    chow_euler_closed,
    chow_euler_recursive,
    chow_series,
    divisor_check,
    points_euler_recursive,
)
from .invariants import (
    QuaternionicParams,
    g_invariant_euler,
    quaternionic_d1_oracle,
    quaternionic_euler_closed,
    quaternionic_p0_oracle,
    sp_euler,
)
from .series import series_coefficient, series_geom_pow, series_mul

__all__ = [
    "Failure",
    "VerificationReport",
    "SUITE_NAMES",
    "recursion_suite",
    "base_cases_suite",
    "series_suite",
    "quaternionic_suite",
    "all_suites",
    "run_suite",
]

SUITE_NAMES = ("recursion", "series", "quaternionic", "base-cases", "all")


@dataclass(frozen=True)
class Failure:
    """One disagreement between two computation paths, with its inputs."""

    inputs: dict[str, str]
    expected_path: str
    expected_value: str
    actual_path: str
    actual_value: str


@dataclass
class VerificationReport:
    """Outcome of a consistency sweep: case count, failures, wall time."""

    suite: str
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(
        self,
        inputs: dict[str, Any],
        expected_path: str,
        expected: Any,
        actual_path: str,
        actual: Any,
    ) -> None:
        """Record one comparison; a mismatch becomes a Failure entry."""
        self.cases_run += 1
        if expected != actual:
            self.failures.append(
                Failure(
                    inputs={k: str(v) for k, v in inputs.items()},
                    expected_path=expected_path,
                    expected_value=str(expected),
                    actual_path=actual_path,
                    actual_value=str(actual),
                )
            )

    def to_json_dict(self) -> dict[str, Any]:
        """JSON-ready dict; every numeric field is a decimal string."""
        return {
            "suite": self.suite,
            "cases_run": str(self.cases_run),
            "failures": [
                {
                    "inputs": dict(f.inputs),
                    "expected": {"path": f.expected_path, "value": f.expected_value},
                    "actual": {"path": f.actual_path, "value": f.actual_value},
                }
                for f in self.failures
            ],
            "elapsed_ms": str(self.elapsed_ms),
        }


def _finish(report: VerificationReport, t0: float) -> VerificationReport:
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def recursion_suite(
    max_p: int = 4, max_n: int = 6, max_d: int = 10, order: int = 12
) -> VerificationReport:
    """Path agreement for chi(C_{p,d}(P^n)), plus the related identities.

    Checks, over p <= min(max_p, n), n <= max_n, d <= max_d: recursion and
    functional-series coefficients against the closed form, positivity of
    every value, the degree-one Pascal reduction, and the divisor-space
    identity.
    """
    report = VerificationReport("recursion")
    t0 = time.perf_counter()
    order = max(order, max_d)
    for n in range(max_n + 1):
        for p in range(min(max_p, n) + 1):
            q = chow_series(p, n, order, method=SERIES_FUNCTIONAL)
            for d in range(max_d + 1):
                params = ChowParams(p, n, d)
                closed = chow_euler_closed(params).chi
                report.check(
                    {"check": "recursive-vs-closed", "p": p, "n": n, "d": d},
                    "closed", closed,
                    "recursive", chow_euler_recursive(params).chi,
                )
                report.check(
                    {"check": "series-vs-closed", "p": p, "n": n, "d": d},
                    "closed", closed,
                    "series", series_coefficient(q, d),
                )
                must_be_one = p == n or d == 0
                report.check(
                    {"check": "positivity", "p": p, "n": n, "d": d},
                    "invariant", True,
                    "closed", closed >= 1 and (closed == 1) == must_be_one,
                )
    for n in range(1, max_n + 1):
        for p in range(n):
            report.check(
                {"check": "pascal-at-degree-one", "p": p, "n": n},
                "pascal-sum", binomial(n + 1, p + 1) + binomial(n + 1, p + 2),
                "recursive", chow_euler_recursive(ChowParams(p + 1, n + 1, 1)).chi,
            )
    for p in range(max_n):
        for d in range(max_d + 1):
            report.check(
                {"check": "divisor-space", "p": p, "d": d},
                "monomial-count", divisor_check(p, d),
                "closed", chow_euler_closed(ChowParams(p, p + 1, d)).chi,
            )
    return _finish(report, t0)


def base_cases_suite(max_n: int = 6, max_d: int = 10) -> VerificationReport:
    """The 0-cycle base case: inner point recursion against C(n+d, d)."""
    report = VerificationReport("base-cases")
    t0 = time.perf_counter()
    for n in range(max_n + 1):
        for d in range(max_d + 1):
            report.check(
                {"check": "points-recursion", "n": n, "d": d},
                "binomial", binomial(n + d, d),
                "points-recursive", points_euler_recursive(n, d),
            )
    return _finish(report, t0)


def series_suite(
    max_n: int = 6, order: int = 12, max_pow: int = 16
) -> VerificationReport:
    """Series-level identities.

    Geometric-power additivity against the Cauchy product, the generating
    function's factorization recurrence in both construction methods, and
    the signed binomial against geometric-series coefficients.
    """
    report = VerificationReport("series")
    t0 = time.perf_counter()
    for a in range(max_pow + 1):
        for b in range(max_pow + 1):
            report.check(
                {"check": "geom-pow-additivity", "a": a, "b": b, "order": order},
                "direct", series_geom_pow(a + b, order).coeffs,
                "product",
                series_mul(series_geom_pow(a, order), series_geom_pow(b, order)).coeffs,
            )
    for method in (SERIES_CLOSED, SERIES_FUNCTIONAL):
        for n in range(1, max_n + 1):
            for p in range(n):
                report.check(
                    {"check": "series-factorization", "p": p, "n": n,
                     "order": order, "method": method},
                    "direct", chow_series(p + 1, n + 1, order, method).coeffs,
                    "product",
                    series_mul(
                        chow_series(p + 1, n, order, method),
                        chow_series(p, n, order, method),
                    ).coeffs,
                )
    for m in range(max_pow + 1):
        s = series_geom_pow(m, order)
        for d in range(order + 1):
            report.check(
                {"check": "signed-binomial-vs-series", "m": m, "d": d},
                "series", series_coefficient(s, d),
                "signed-binomial", binomial_signed(m, d),
            )
    return _finish(report, t0)


def quaternionic_suite(max_n: int = 6, max_d: int = 10) -> VerificationReport:
    """Invariant-cycle identities.

    The two quaternionic decomposition oracles against the closed form, the
    identification with the plain cycle spaces of P^{2n-1}, the invariance
    of the count under diagonalizable group actions, and the vanishing of
    symmetric products of a space with Euler characteristic zero.
    """
    report = VerificationReport("quaternionic")
    t0 = time.perf_counter()
    for n in range(1, max_n + 1):
        for d in range(max_d + 1):
            report.check(
                {"check": "p0-oracle", "n": n, "d": d},
                "closed", quaternionic_euler_closed(QuaternionicParams(0, n, d)),
                "oracle-p0", quaternionic_p0_oracle(n, d),
            )
        for p in range(2 * n):
            report.check(
                {"check": "d1-oracle", "p": p, "n": n},
                "closed", quaternionic_euler_closed(QuaternionicParams(p, n, 1)),
                "oracle-d1", quaternionic_d1_oracle(p, n),
            )
            report.check(
                {"check": "d1-vandermonde", "p": p, "n": n},
                "binomial", binomial(2 * n, p + 1),
                "oracle-d1", quaternionic_d1_oracle(p, n),
            )
            for d in range(max_d + 1):
                report.check(
                    {"check": "ambient-match", "p": p, "n": n, "d": d},
                    "chow-closed", chow_euler_closed(ChowParams(p, 2 * n - 1, d)).chi,
                    "quaternionic-closed",
                    quaternionic_euler_closed(QuaternionicParams(p, n, d)),
                )
    for n in range(max_n + 1):
        for p in range(n + 1):
            for d in range(max_d + 1):
                params = ChowParams(p, n, d)
                report.check(
                    {"check": "group-invariant-match", "p": p, "n": n, "d": d},
                    "chow-closed", chow_euler_closed(params).chi,
                    "group-invariant", g_invariant_euler(params),
                )
    for m in range(max(max_d, 20) + 1):
        report.check(
            {"check": "sp-of-chi-zero", "m": m},
            "invariant", 1 if m == 0 else 0,
            "sp-euler", sp_euler(0, m),
        )
    return _finish(report, t0)


def all_suites(
    max_p: int = 4, max_n: int = 6, max_d: int = 10, order: int = 12
) -> VerificationReport:
    """Every suite in sequence, aggregated into a single report.

    Failures keep their originating suite name inside ``inputs``.
    """
    t0 = time.perf_counter()
    combined = VerificationReport("all")
    parts = (
        recursion_suite(max_p=max_p, max_n=max_n, max_d=max_d, order=order),
        base_cases_suite(max_n=max_n, max_d=max_d),
        series_suite(max_n=max_n, order=order),
        quaternionic_suite(max_n=max_n, max_d=max_d),
    )
    for part in parts:
        combined.cases_run += part.cases_run
        for f in part.failures:
            combined.failures.append(
                Failure(
                    inputs={"suite": part.suite, **f.inputs},
                    expected_path=f.expected_path,
                    expected_value=f.expected_value,
                    actual_path=f.actual_path,
                    actual_value=f.actual_value,
                )
            )
    return _finish(combined, t0)


def run_suite(
    name: str,
    max_p: int = 4,
    max_n: int = 6,
    max_d: int = 10,
    order: int = 12,
) -> VerificationReport:
    """Dispatch a suite by CLI name; bounds must be nonnegative."""
    for label, bound in (("max_p", max_p), ("max_n", max_n),
                         ("max_d", max_d), ("order", order)):
        if bound < 0:
            raise ValueError(f"{label} must be nonnegative, got {bound}")
    if name == "recursion":
        return recursion_suite(max_p=max_p, max_n=max_n, max_d=max_d, order=order)
    if name == "series":
        return series_suite(max_n=max_n, order=order)
    if name == "base-cases":
        return base_cases_suite(max_n=max_n, max_d=max_d)
    if name == "quaternionic":
        return quaternionic_suite(max_n=max_n, max_d=max_d)
    if name == "all":
        return all_suites(max_p=max_p, max_n=max_n, max_d=max_d, order=order)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")

"""Command line surface: single values, series and degree tables,
quaternionic checks, and the verification sweeps.

Output is deterministic for a given command line.  Every number inside JSON
output is a decimal string, never a float, so arbitrarily large counts pass
through any JSON consumer unchanged.  Exit codes: 0 for success or a clean
verification, 1 when any cross-check disagrees, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chow import (
    ChowParams,
    SERIES_CLOSED,
    SERIES_FUNCTIONAL,
    chow_euler_closed,
    chow_euler_recursive,
    chow_euler_series,
    chow_series,
)
from .invariants import (
    QuaternionicParams,
    quaternionic_d1_oracle,
    quaternionic_euler_closed,
    quaternionic_p0_oracle,
)
from .verify import SUITE_NAMES, run_suite

__all__ = ["main", "build_parser"]


def _query(subcommand: str, **params) -> dict:
    return {
        "subcommand": subcommand,
        "params": {k: str(v) for k, v in params.items()},
    }


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _print_csv(rows: list[tuple[str, str]], header: str) -> None:
    lines = [header] + [f"{a},{b}" for a, b in rows]
    print("\n".join(lines))


def _cmd_chow(args) -> int:
    params = ChowParams(args.p, args.n, args.d)
    methods = ["closed", "recursive", "series"] if args.method == "all" else [args.method]
    compute = {
        "closed": chow_euler_closed,
        "recursive": chow_euler_recursive,
        "series": chow_euler_series,
    }
    results = [
        {"method": m, "value": str(compute[m](params).chi)} for m in methods
    ]
    payload = {
        "query": _query("chow", p=args.p, n=args.n, d=args.d, method=args.method),
        "results": results,
    }
    match = None
    if args.method == "all":
        match = len({r["value"] for r in results}) == 1
        payload["match"] = match
    if args.format == "json":
        _print_json(payload)
    else:
        rows = [(r["method"], r["value"]) for r in results]
        if match is not None:
            rows.append(("match", "true" if match else "false"))
        _print_csv(rows, "method,value")
    return 0 if match in (None, True) else 1


def _cmd_series(args) -> int:
    s = chow_series(args.p, args.n, args.order, method=args.method)
    coeffs = [str(c) for c in s.coeffs]
    if args.format == "json":
        _print_json({
            "query": _query("series", p=args.p, n=args.n,
                            order=args.order, method=args.method),
            "results": [{"method": args.method, "value": coeffs}],
        })
    else:
        _print_csv([(str(d), c) for d, c in enumerate(coeffs)], "d,chi")
    return 0


def _cmd_quaternionic(args) -> int:
    params = QuaternionicParams(args.p, args.qn, args.d)
    results = [{"method": "closed", "value": str(quaternionic_euler_closed(params))}]
    note = None
    if args.oracle == "auto":
        if args.p == 0:
            results.append({
                "method": "oracle-p0",
                "value": str(quaternionic_p0_oracle(args.qn, args.d)),
            })
        if args.d == 1:
            results.append({
                "method": "oracle-d1",
                "value": str(quaternionic_d1_oracle(args.p, args.qn)),
            })
        if len(results) == 1:
            note = "no decomposition oracle applies; oracles cover p=0 and d=1"
    payload = {
        "query": _query("quaternionic", p=args.p, qn=args.qn,
                        d=args.d, oracle=args.oracle),
        "results": results,
    }
    match = None
    if len(results) > 1:
        match = len({r["value"] for r in results}) == 1
        payload["match"] = match
    if note is not None:
        payload["note"] = note
    if args.format == "json":
        _print_json(payload)
    else:
        rows = [(r["method"], r["value"]) for r in results]
        if match is not None:
            rows.append(("match", "true" if match else "false"))
        if note is not None:
            rows.append(("note", note))
        _print_csv(rows, "method,value")
    return 0 if match in (None, True) else 1


def _cmd_table(args) -> int:
    if args.max_d < 0:
        raise ValueError(f"max_d must be nonnegative, got {args.max_d}")
    ChowParams(args.p, args.n, 0)   # validate p, n early
    rows = [
        (str(d), str(chow_euler_closed(ChowParams(args.p, args.n, d)).chi))
        for d in range(args.max_d + 1)
    ]
    if args.format == "json":
        _print_json({
            "query": _query("table", p=args.p, n=args.n, max_d=args.max_d),
            "rows": [{"d": d, "chi": chi} for d, chi in rows],
        })
    else:
        _print_csv(rows, "d,chi")
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(
        args.suite,
        max_p=args.max_p,
        max_n=args.max_n,
        max_d=args.max_d,
        order=args.order,
    )
    _print_json(report.to_json_dict())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chowchi",
        description="Exact Euler characteristics of cycle spaces of projective space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chow = sub.add_parser(
        "chow", help="chi(C_{p,d}(P^n)) for one parameter triple")
    p_chow.add_argument("--p", type=int, required=True, help="cycle dimension")
    p_chow.add_argument("--n", type=int, required=True,
                        help="ambient projective dimension")
    p_chow.add_argument("--d", type=int, required=True, help="cycle degree")
    p_chow.add_argument("--method", default="closed",
                        choices=["closed", "recursive", "series", "all"],
                        help="computation path, or all three with a match flag")
    p_chow.add_argument("--format", default="json", choices=["json", "csv"])
    p_chow.set_defaults(func=_cmd_chow)

    p_series = sub.add_parser(
        "series", help="coefficients of the generating function Q_{p,n}(t)")
    p_series.add_argument("--p", type=int, required=True, help="cycle dimension")
    p_series.add_argument("--n", type=int, required=True,
                          help="ambient projective dimension")
    p_series.add_argument("--order", type=int, required=True,
                          help="truncation degree")
    p_series.add_argument("--method", default=SERIES_CLOSED,
                          choices=[SERIES_CLOSED, SERIES_FUNCTIONAL],
                          help="direct expansion or functional-equation build")
    p_series.add_argument("--format", default="json", choices=["json", "csv"])
    p_series.set_defaults(func=_cmd_series)

    p_quat = sub.add_parser(
        "quaternionic",
        help="chi of the right quaternionic cycle space inside P^{2n-1}")
    p_quat.add_argument("--p", type=int, required=True, help="cycle dimension")
    p_quat.add_argument("--qn", type=int, required=True,
                        help="quaternionic dimension n (ambient space P^{2n-1})")
    p_quat.add_argument("--d", type=int, required=True, help="cycle degree")
    p_quat.add_argument("--oracle", default="none", choices=["none", "auto"],
                        help="also run the decomposition oracle when one applies")
    p_quat.add_argument("--format", default="json", choices=["json", "csv"])
    p_quat.set_defaults(func=_cmd_quaternionic)

    p_verify = sub.add_parser(
        "verify", help="run a consistency sweep and emit a JSON report")
    p_verify.add_argument("--suite", default="all", choices=list(SUITE_NAMES))
    p_verify.add_argument("--max-p", type=int, default=4, dest="max_p")
    p_verify.add_argument("--max-n", type=int, default=6, dest="max_n")
    p_verify.add_argument("--max-d", type=int, default=10, dest="max_d")
    p_verify.add_argument("--order", type=int, default=12)
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser(
        "table", help="degree table of chi(C_{p,d}(P^n)) for d = 0..max-d")
    p_table.add_argument("--p", type=int, required=True, help="cycle dimension")
    p_table.add_argument("--n", type=int, required=True,
                         help="ambient projective dimension")
    p_table.add_argument("--max-d", type=int, required=True, dest="max_d")
    p_table.add_argument("--format", default="json", choices=["json", "csv"])
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"chowchi: error: {exc}", file=sys.stderr)
        return 2

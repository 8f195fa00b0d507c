"""Command-line front end.

Subcommands:

* ``bound``  -- evaluate every requested bound on one query (text or JSON)
* ``sweep``  -- tabulate bounds over a delta grid into the fixed-schema CSV
* ``verify`` -- run the exhaustive invariant battery over a population grid
* ``invert`` -- smallest threshold whose best bound drops below epsilon

Exit codes: 0 success; 1 verification found violations (soundness, or
tolerated ones under --strict); 2 usage/validation error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from . import __version__
from .bounds import (
    DEFAULT_METHODS,
    BoundMethod,
    BoundReport,
    BoundResult,
    best_bound,
    invert_threshold,
)
from .errors import HypertailError
from .exact import HypergeomParams, TailQuery
from .special import NEG_INF
from .sweep import SweepConfig, write_sweep_csv
from .verify import SOUNDNESS_PROPERTIES, run_battery

_METHOD_BY_NAME = {m.value: m for m in DEFAULT_METHODS}


def _parse_methods(spec: Optional[str]) -> Optional[tuple[BoundMethod, ...]]:
    if spec is None:
        return None
    names = [s.strip() for s in spec.split(",") if s.strip()]
    unknown = [s for s in names if s not in _METHOD_BY_NAME]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown methods {unknown}; choose from {sorted(_METHOD_BY_NAME)}")
    return tuple(_METHOD_BY_NAME[s] for s in names)


def _log10(log_value: Optional[float]) -> Optional[float]:
    if log_value is None or log_value == NEG_INF:
        return None
    return log_value / math.log(10.0)


def _rep_dict(result: BoundResult) -> dict:
    rep = result.representation
    return {
        "population": rep.params.population,
        "successes": rep.params.successes,
        "draws": rep.params.draws,
        "threshold": rep.threshold,
        "transform_chain": [t.value for t in rep.transform_chain],
    }


def _result_dict(result: BoundResult) -> dict:
    return {
        "method": result.method.value,
        "representation": _rep_dict(result),
        "log10_value": _log10(result.log_value),
        "value": result.linear_value,
        "applicable": result.applicable,
    }


def _report_json(report: BoundReport) -> dict:
    q = report.query
    exact = None
    if report.exact is not None:
        exact = {"log10_value": _log10(report.exact),
                 "value": 0.0 if report.exact == NEG_INF else math.exp(report.exact)}
    return {
        "query": {
            "population": q.params.population,
            "successes": q.params.successes,
            "draws": q.params.draws,
            "threshold": q.threshold,
            "direction": q.direction.value,
        },
        "results": [_result_dict(r) for r in report.results],
        "exact": exact,
        "best": _result_dict(report.best),
    }


def _rep_label(result: BoundResult) -> str:
    rep = result.representation
    chain = "+".join(t.value for t in rep.transform_chain)
    return (f"{chain}(N={rep.params.population},K={rep.params.successes},"
            f"n={rep.params.draws},d={rep.threshold})")


def _print_report_text(report: BoundReport) -> None:
    q = report.query
    p = q.params
    print(f"query: N={p.population} K={p.successes} n={p.draws} "
          f"d={q.threshold} ({q.direction.value} tail)")
    print(f"mean nK/N = {float(p.mean):.6g}   support = "
          f"[{p.support_min}, {p.support_max}]   "
          f"sampling fraction n/N = {p.sampling_fraction:.6g}")
    print()
    print(f"{'method':<18} {'representation':<42} {'log10':>14} {'value':>24}")
    for r in report.results:
        if not r.applicable:
            print(f"{r.method.value:<18} {_rep_label(r):<42} "
                  f"{'n/a':>14} {'(precondition failed)':>24}")
            continue
        l10 = _log10(r.log_value)
        l10_s = f"{l10:.6f}" if l10 is not None else "-inf"
        tag = " [degenerate support]" if r.degenerate_support else ""
        print(f"{r.method.value:<18} {_rep_label(r):<42} "
              f"{l10_s:>14} {r.linear_value:>24.16e}{tag}")
    print()
    if report.exact is not None:
        exact_lin = 0.0 if report.exact == NEG_INF else math.exp(report.exact)
        l10 = _log10(report.exact)
        l10_s = f"{l10:.6f}" if l10 is not None else "-inf"
        print(f"exact: log10 = {l10_s}   value = {exact_lin:.16e}")
    else:
        print("exact: not computed (summation budget exceeded)")
    print(f"best:  {report.best.method.value} on {_rep_label(report.best)} "
          f"value = {report.best.linear_value:.16e}")


def _cmd_bound(args: argparse.Namespace) -> int:
    params = HypergeomParams(args.population, args.successes, args.draws)
    query = TailQuery(params, args.threshold)
    report = best_bound(query, args.methods)
    if args.format == "json":
        print(json.dumps(_report_json(report), indent=2))
    else:
        _print_report_text(report)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    methods = args.methods if args.methods is not None else DEFAULT_METHODS
    config = SweepConfig(
        population=args.population,
        ratio=args.ratio,
        draws=args.draws,
        delta_min=args.delta_min,
        delta_max=args.delta_max,
        delta_steps=args.delta_steps,
        methods=tuple(methods),
        include_exact=not args.no_exact,
    )
    records = write_sweep_csv(config, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    checks = run_battery(args.max_population)
    for c in checks:
        tolerated = "" if c.name in SOUNDNESS_PROPERTIES else "  (tolerated unless --strict)"
        print(f"{c.name:<26} checks={c.checks:<9} violations={len(c.violations)}{tolerated}")
        for v in c.violations:
            print(f"  VIOLATION {c.name}: {v}")
    if args.report:
        payload = {
            "max_population": args.max_population,
            "properties": [
                {"name": c.name, "checks": c.checks,
                 "violations": c.violations,
                 "soundness": c.name in SOUNDNESS_PROPERTIES}
                for c in checks
            ],
        }
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
        print(f"report written to {args.report}")
    soundness_bad = sum(len(c.violations) for c in checks
                        if c.name in SOUNDNESS_PROPERTIES)
    tolerated_bad = sum(len(c.violations) for c in checks
                        if c.name not in SOUNDNESS_PROPERTIES)
    if soundness_bad:
        print(f"FAIL: {soundness_bad} soundness violations")
        return 1
    if tolerated_bad and args.strict:
        print(f"FAIL (--strict): {tolerated_bad} tolerated violations")
        return 1
    print("PASS" if not tolerated_bad else
          f"PASS with {tolerated_bad} tolerated violations")
    return 0


def _cmd_invert(args: argparse.Namespace) -> int:
    params = HypergeomParams(args.population, args.successes, args.draws)
    methods = args.methods
    d = invert_threshold(params, args.epsilon, methods)
    if d <= params.support_max:
        report = best_bound(TailQuery(params, d), methods, compute_exact=False)
        value = report.best.linear_value
    else:
        # Beyond the support the tail is identically zero.
        value = 0.0
    print(f"threshold: {d}")
    print(f"bound: {value:.16e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypertail",
        description="Rigorous tail bounds on the hypergeometric distribution.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="evaluate bounds on a single upper-tail query")
    b.add_argument("--population", type=int, required=True)
    b.add_argument("--successes", type=int, required=True)
    b.add_argument("--draws", type=int, required=True)
    b.add_argument("--threshold", type=int, required=True)
    b.add_argument("--methods", type=_parse_methods, default=None,
                   help="comma-separated subset of "
                        f"{','.join(sorted(_METHOD_BY_NAME))} (default: all)")
    b.add_argument("--format", choices=("text", "json"), default="text")
    b.set_defaults(func=_cmd_bound)

    s = sub.add_parser("sweep", help="tabulate bounds over a delta grid as CSV")
    s.add_argument("--population", type=int, required=True)
    s.add_argument("--ratio", type=float, required=True,
                   help="marked fraction K/N; K = round(ratio*N)")
    s.add_argument("--draws", type=int, required=True)
    s.add_argument("--delta-min", type=float, required=True)
    s.add_argument("--delta-max", type=float, required=True)
    s.add_argument("--delta-steps", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--methods", type=_parse_methods, default=None)
    s.add_argument("--no-exact", action="store_true",
                   help="skip the exact-tail column")
    s.set_defaults(func=_cmd_sweep)

    v = sub.add_parser("verify", help="run the exhaustive invariant battery")
    v.add_argument("--max-population", type=int, default=40)
    v.add_argument("--report", default=None, help="write a JSON report here")
    v.add_argument("--strict", action="store_true",
                   help="fail on tolerated (empirical) violations too")
    v.set_defaults(func=_cmd_verify)

    i = sub.add_parser("invert", help="smallest threshold with best bound <= epsilon")
    i.add_argument("--population", type=int, required=True)
    i.add_argument("--successes", type=int, required=True)
    i.add_argument("--draws", type=int, required=True)
    i.add_argument("--epsilon", type=float, required=True)
    i.add_argument("--methods", type=_parse_methods, default=None)
    i.set_defaults(func=_cmd_invert)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypertailError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

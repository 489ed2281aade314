"""Command-line driver: validate, aggregate, rough, rank, reproduce, reduce."""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .corpus import emit_report, reproduce_all, resolve_precision
from .errors import ScenarioError, UsetError
from .reductions import REDUCTION_CASES, check_reductions
from .scenario import load_scenario, render_result, render_value, run_scenario, validate_scenario

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_RUNTIME = 2
EXIT_REPRODUCE_FAILED = 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uset", description="Contradiction-weighted uncertain-set toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check a scenario file and list every problem")
    v.add_argument("file")

    a = sub.add_parser("aggregate", help="aggregate every element against a dominant value")
    a.add_argument("file")
    a.add_argument("--dominant", help="dominant value; tree, forest and nonstandard files carry their own")
    a.add_argument("--precision", type=int)
    a.add_argument("--verbose", action="store_true", help="also print weights and intermediate values")

    r = sub.add_parser("rough", help="lower and upper approximation of a target set")
    r.add_argument("file")
    r.add_argument("--target", required=True, help="comma-separated elements")
    r.add_argument("--precision", type=int)

    k = sub.add_parser("rank", help="elements by descending aggregate score")
    k.add_argument("file")
    k.add_argument("--dominant")
    k.add_argument("--precision", type=int)

    rp = sub.add_parser("reproduce", help="recompute the worked-example corpus")
    rp.add_argument("--filter", dest="selector", help="case id prefix such as 3.16")
    rp.add_argument("--format", dest="fmt", default="csv", choices=("csv", "json"))
    rp.add_argument("--precision", type=int)
    rp.add_argument("--workers", type=int, default=1)

    rd = sub.add_parser("reduce", help="round-trip checks for the embeddings between variants")
    rd.add_argument("--check", action="store_true", required=True)
    rd.add_argument("--seed", type=int, default=0)
    rd.add_argument("--cases", type=int, default=1000, help="random instances per reduction")
    return p


def _validate(args) -> int:
    try:
        doc = load_scenario(args.file)
    except ScenarioError as exc:
        for loc, msg in exc.diagnostics:
            print(f"{loc}: {msg}" if loc else msg, file=sys.stderr)
        return EXIT_INVALID
    problems = validate_scenario(doc)
    for loc, msg in problems:
        print(f"{loc}: {msg}", file=sys.stderr)
    if problems:
        return EXIT_INVALID
    print(f"ok: {doc.kind} scenario")
    return EXIT_OK


def _run(args, command: str) -> int:
    try:
        doc = load_scenario(args.file)
    except ScenarioError as exc:
        print(f"invalid scenario: {exc}", file=sys.stderr)
        return EXIT_INVALID
    precision = resolve_precision(args.precision)
    result = run_scenario(doc, command, dominant=getattr(args, "dominant", None),
                          target=getattr(args, "target", None))
    if command == "rank":
        for i, (x, score) in enumerate(result.rows, 1):
            print(f"{i}\t{x}\t{render_value(score, precision)}")
    else:
        sys.stdout.write(render_result(result, precision, getattr(args, "verbose", False)))
    return EXIT_OK


def _reproduce(args) -> int:
    report = reproduce_all(args.selector, workers=max(1, args.workers))
    sys.stdout.write(emit_report(report, args.fmt, args.precision))
    counts = ", ".join(f"{s} {report.count(s)}" for s in ("pass", "erratum", "fail"))
    print(f"{len(report.records)} cases: {counts}", file=sys.stderr)
    return EXIT_REPRODUCE_FAILED if report.failed else EXIT_OK


def _reduce(args) -> int:
    if args.cases < 1:
        raise UsetError("--cases must be at least 1")
    outcomes = check_reductions(args.seed, args.cases)
    bad = 0
    for o in outcomes:
        status = "ok" if o.failures == 0 else "FAILED"
        line = f"{o.name}\t{o.instances}\t{o.failures}\t{status}"
        if o.first_failure:
            line += f"\t{o.first_failure}"
        print(line)
        bad += o.failures
    print(f"{len(REDUCTION_CASES)} reductions, {bad} failures", file=sys.stderr)
    return EXIT_INVALID if bad else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "validate":
            return _validate(args)
        if args.command in ("aggregate", "rough", "rank"):
            return _run(args, args.command)
        if args.command == "reproduce":
            return _reproduce(args)
        return _reduce(args)
    except (UsetError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())

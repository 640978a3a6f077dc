"""Command-line entry point.

Every subcommand prints one JSON document on stdout; diagnostics go to
stderr.  Exit codes: 10 satisfiable, 20 unsatisfiable, 2 interlaced input
without ``--force-interlaced``, 1 I/O or parse error, 3 fatal fuzz finding,
0 otherwise.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .counter import Verdict, decide, trace_run
from .formula import EmptyClauseError, ParseError, analyze, load, permute
from .harness import FatalDiscrepancy, fuzz
from .oracle import DEFAULT_CAP, GeneratorParams, SearchSpaceTooLarge, brute_force_count, brute_force_sat
from .reorder import find_order_exact, find_order_greedy

EXIT_OK, EXIT_ERROR, EXIT_INTERLACED, EXIT_FATAL = 0, 1, 2, 3
EXIT_SAT, EXIT_UNSAT = 10, 20

log = logging.getLogger("nisat")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nisat", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="also write the JSON document here")
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock fields")

    inp = argparse.ArgumentParser(add_help=False, parents=[common])
    inp.add_argument("path")
    inp.add_argument("--format", choices=("dimacs", "json"),
                     help="input format (default: by extension, .json or DIMACS)")
    inp.add_argument("--strict", action="store_true", help="DIMACS header mismatches are errors")
    inp.add_argument("--empty-clause-unsat", action="store_true",
                     help="answer UNSAT on an empty clause instead of rejecting the input")

    for name in ("count", "decide"):
        s = sub.add_parser(name, parents=[inp])
        s.add_argument("--force-interlaced", action="store_true")
        s.add_argument("--check", action="store_true", help="cross-check every alpha by matrix power")
        s.add_argument("--trace", help="write a JSON Lines trace to this path")
    sub.add_parser("analyze", parents=[inp])
    s = sub.add_parser("oracle", parents=[inp])
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s = sub.add_parser("reorder", parents=[inp])
    s.add_argument("--budget", type=int, default=1_000_000)
    s.add_argument("--greedy", action="store_true")
    s = sub.add_parser("trace", parents=[inp])
    s.add_argument("--trace", help="write the JSON Lines trace here")
    s = sub.add_parser("fuzz", parents=[common])
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--mode", choices=("any", "noninterlaced", "interlaced"), default="any")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--max-clauses", type=int, default=8)
    s.add_argument("--width", type=int, default=3)
    s.add_argument("--vars", type=int, default=6)
    return p


def _emit(doc: dict, args) -> None:
    text = json.dumps(doc, indent=2)
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _verdict_code(v: Verdict) -> int:
    return {Verdict.SAT: EXIT_SAT, Verdict.UNSAT: EXIT_UNSAT}.get(v, EXIT_INTERLACED)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    timings = not args.no_timing

    if args.cmd == "fuzz":
        params = GeneratorParams(clauses=(1, args.max_clauses), width=args.width,
                                 variables=args.vars, seed=args.seed, mode=args.mode)
        try:
            report = fuzz(params, args.trials, cap=args.cap)
        except FatalDiscrepancy as e:
            _emit({"fatal": True, "reproduction": e.bundle}, args)
            return EXIT_FATAL
        _emit(report.to_json(timings), args)
        print(f"fuzz: {report.agreements}/{report.trials} agree, "
              f"{len(report.discrepancies)} interlaced discrepancies", file=sys.stderr)
        return EXIT_OK

    try:
        f = load(args.path, args.format, strict=args.strict)
    except EmptyClauseError as e:
        if getattr(args, "empty_clause_unsat", False) and args.cmd in ("count", "decide", "oracle"):
            _emit({"verdict": "unsat", "pi_s_t": "0", "reason": str(e)}, args)
            return EXIT_UNSAT
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if args.cmd in ("count", "decide"):
        res = decide(f, force_interlaced=args.force_interlaced, check=args.check)
        doc = res.to_json(timings)
        if args.trace:
            trace_run(f).write(args.trace)
        _emit(doc, args)
        if res.interlaced:
            print(f"interlaced input, crossing {res.witness}; pi(s,t) is advisory",
                  file=sys.stderr)
        return _verdict_code(res.verdict)

    if args.cmd == "analyze":
        _emit(analyze(f), args)
        return EXIT_OK

    if args.cmd == "oracle":
        try:
            gamma = brute_force_count(f, args.cap)
            choice = brute_force_sat(f, args.cap)
        except SearchSpaceTooLarge as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_ERROR
        _emit({"gamma": str(gamma), "verdict": "sat" if choice else "unsat",
               "witness": choice.to_json() if choice else None}, args)
        return EXIT_SAT if choice else EXIT_UNSAT

    if args.cmd == "reorder":
        res = find_order_greedy(f) if args.greedy else find_order_exact(f, args.budget)
        doc = res.to_json()
        if res.found:
            doc["analysis"] = analyze(permute(f, res.sigma))
        _emit(doc, args)
        return EXIT_OK

    if args.cmd == "trace":
        tr = trace_run(f)
        if args.trace:
            tr.write(args.trace, timings)
        _emit({"initial": tr.initial,
               "events": [e.to_json() for e in tr.events],
               "final": tr.final,
               "result": tr.result.to_json(timings)}, args)
        return EXIT_OK
    raise AssertionError(args.cmd)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

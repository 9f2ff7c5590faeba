"""Command-line front end: decide formulas, inspect runs and trees, and
verify machine/reference agreement and oracle monotonicity.

Exit codes across all commands: 0 accept/OK, 1 reject/violation, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .corpus import CorpusError, load_corpus, random_corpus
from .formula import Formula, ParseError, assignment_bits, num_vars, parse, serialize
from .machine import (
    Transcript,
    build_query_tree,
    decide_oddmaxsat,
    render_tree,
    run_machine,
    tree_to_json,
)
from .oracle import Query, SUBSET_PAIR_BOUND, one_query_decider, sat_join_cosat
from .positivity import (
    DEFAULT_SAMPLES,
    PositivityReport,
    check_positivity_exhaustive,
    check_positivity_sampled,
)
from .sat import lexmax, odd_max_sat_ref

DEFAULT_RANDOM_COUNT = 2000
DEFAULT_MAX_VARS = 8
DEFAULT_NODE_BUDGET = 25


def _verdict_word(verdict: bool) -> str:
    return "accept" if verdict else "reject"


def _print_json(payload: object) -> None:
    print(json.dumps(payload, indent=2))


def _trace_lines(transcript: Transcript) -> list[str]:
    lines = []
    for it in transcript.iterations:
        r0, r1 = it.records
        lines.append(
            f"i={it.index}: {r0.query.wire()}={'yes' if r0.answer else 'no'} "
            f"{r1.query.wire()}={'yes' if r1.answer else 'no'} -> {it.case.value}"
        )
    return lines


def cmd_decide(args: argparse.Namespace) -> int:
    transcript = run_machine(args.formula, sat_join_cosat)
    if not transcript.well_formed:
        if args.json:
            _print_json(transcript.to_json())
        try:
            parse(args.formula)
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        _print_json(transcript.to_json())
    else:
        print(_verdict_word(transcript.verdict))
        if args.trace:
            for line in _trace_lines(transcript):
                print(line)
    return 0 if transcript.verdict else 1


def cmd_lexmax(args: argparse.Namespace) -> int:
    try:
        formula = parse(args.formula)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    witness = lexmax(formula)
    if args.json:
        _print_json(
            {
                "formula": serialize(formula),
                "assignment": None if witness is None else assignment_bits(witness),
            }
        )
    else:
        print("UNSAT" if witness is None else assignment_bits(witness))
    return 1 if witness is None else 0


def _reference_verdict(formula: Formula) -> bool:
    # The machine rejects constant formulas; mirror that in the reference.
    if num_vars(formula) == 0:
        return False
    return odd_max_sat_ref(formula)


def _load_equivalence_batch(args: argparse.Namespace) -> tuple[list[Formula], dict]:
    if args.corpus is not None:
        return load_corpus(args.corpus), {"source": f"corpus:{args.corpus}", "seed": None}
    seed = args.seed if args.seed is not None else random.SystemRandom().randrange(2**32)
    batch = random_corpus(args.random, args.max_vars, args.size, seed)
    return batch, {"source": f"random:{args.random}", "seed": seed}


def cmd_verify_equivalence(args: argparse.Namespace) -> int:
    try:
        batch, meta = _load_equivalence_batch(args)
    except (CorpusError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    mismatches = []
    for formula in batch:
        machine_verdict = decide_oddmaxsat(formula)
        reference_verdict = _reference_verdict(formula)
        if machine_verdict != reference_verdict:
            mismatches.append(
                {
                    "formula": serialize(formula),
                    "machine": _verdict_word(machine_verdict),
                    "reference": _verdict_word(reference_verdict),
                }
            )
    if args.json:
        _print_json(
            {
                **meta,
                "checked": len(batch),
                "mismatchCount": len(mismatches),
                "mismatches": mismatches,
            }
        )
    else:
        if meta["seed"] is not None:
            print(f"seed={meta['seed']}")
        for entry in mismatches:
            print(
                f"mismatch: {entry['formula']} machine={entry['machine']} "
                f"reference={entry['reference']}"
            )
        print(f"checked={len(batch)} mismatches={len(mismatches)}")
    return 0 if not mismatches else 1


def _positivity_line(report: PositivityReport) -> str:
    if report.ok:
        return (
            f"OK {report.formula} mode={report.mode} "
            f"universe={report.universe_size} pairs={report.pairs_checked}"
        )
    violation = report.violation
    small = ",".join(sorted(q.wire() for q in violation.small.members))
    large = ",".join(sorted(q.wire() for q in violation.large.members))
    return f"VIOLATION {report.formula} S={{{small}}} T={{{large}}}"


def cmd_verify_positivity(args: argparse.Namespace) -> int:
    if (args.formula is None) == (args.corpus is None):
        print("error: provide a formula or --corpus, not both", file=sys.stderr)
        return 2
    try:
        if args.corpus is not None:
            batch = load_corpus(args.corpus)
        else:
            batch = [parse(args.formula)]
    except (CorpusError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    sampled = args.samples is not None
    seed = args.seed
    if sampled and seed is None:
        seed = random.SystemRandom().randrange(2**32)
        if not args.json:
            print(f"seed={seed}")

    reports: list[PositivityReport] = []
    skipped: list[str] = []
    for formula in batch:
        if sampled:
            reports.append(check_positivity_sampled(formula, args.samples, seed))
            continue
        try:
            reports.append(check_positivity_exhaustive(formula))
        except ValueError as exc:
            if args.corpus is not None:
                skipped.append(serialize(formula))
                continue
            print(f"error: {exc}; use --samples for universes beyond "
                  f"{SUBSET_PAIR_BOUND}", file=sys.stderr)
            return 2

    if args.json:
        payload: object = [r.to_json() for r in reports]
        if args.corpus is None:
            payload = reports[0].to_json()
        _print_json(payload)
    else:
        for report in reports:
            print(_positivity_line(report))
        for text in skipped:
            print(f"skipped {text} (universe beyond the exhaustive bound; use --samples)")
    return 0 if all(r.ok for r in reports) else 1


def cmd_tree(args: argparse.Namespace) -> int:
    try:
        formula = parse(args.formula)
        tree = build_query_tree(formula)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        _print_json(tree_to_json(tree))
    else:
        print(render_tree(tree))
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    sat_calls: list[str] = []
    try:
        query = Query.from_wire(args.query)
    except ValueError:
        query = None
    if query is None:
        answer = False
    elif args.one_query:
        answer = one_query_decider(query, sat_calls)
    else:
        answer = sat_join_cosat(query)
    if args.json:
        payload = {"query": args.query, "answer": answer}
        if args.one_query:
            payload["satCalls"] = sat_calls
        _print_json(payload)
    else:
        if args.one_query:
            for body in sat_calls:
                print(f"sat-call: {body}")
        print("yes" if answer else "no")
    return 0 if answer else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddmax",
        description=(
            "Decide whether a formula's lexicographically greatest satisfying "
            "assignment ends in a true bit, by running a two-query-per-variable "
            "oracle machine, and verify the machine's monotonicity."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="run the machine on a formula")
    p.add_argument("formula")
    p.add_argument("--trace", action="store_true", help="print the query transcript")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("lexmax", parents=[common],
                       help="print the lexicographically greatest satisfying assignment")
    p.add_argument("formula")
    p.set_defaults(func=cmd_lexmax)

    p = sub.add_parser("verify-equivalence", parents=[common],
                       help="compare the machine against the reference decider")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--corpus", help="corpus file, one formula per line")
    group.add_argument("--random", type=int, nargs="?", const=DEFAULT_RANDOM_COUNT,
                       help=f"check a random batch (default {DEFAULT_RANDOM_COUNT})")
    p.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)
    p.add_argument("--size", type=int, default=DEFAULT_NODE_BUDGET,
                   help="node budget for random formulas")
    p.add_argument("--seed", type=int, help="seed for the random batch")
    p.set_defaults(func=cmd_verify_equivalence)

    p = sub.add_parser("verify-positivity", parents=[common],
                       help="check that larger oracles never lose accepted inputs")
    p.add_argument("formula", nargs="?")
    p.add_argument("--corpus", help="corpus file, one formula per line")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true",
                      help=f"sweep all nested oracle pairs (universe <= {SUBSET_PAIR_BOUND}; default)")
    mode.add_argument("--samples", type=int, nargs="?", const=DEFAULT_SAMPLES,
                      help=f"sample nested pairs instead (default {DEFAULT_SAMPLES})")
    p.add_argument("--seed", type=int, help="seed for sampled mode")
    p.set_defaults(func=cmd_verify_positivity)

    p = sub.add_parser("tree", parents=[common],
                       help="dump the tree of all runs over all oracle answers")
    p.add_argument("formula")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("oracle", parents=[common],
                       help="answer one raw query string (body plus trailing tag)")
    p.add_argument("query")
    p.add_argument("--one-query", action="store_true",
                   help="use the single-call decider and report the call made")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

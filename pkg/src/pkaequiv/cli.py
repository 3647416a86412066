"""Command line: ``check``, ``semantics`` and ``witness`` on a problem file.

Exit codes for ``check``: 0 equivalent, 1 not equivalent, 2 bad input,
3 stage budget exhausted.  ``witness``: 0 found, 1 none within the cap,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from pkaequiv.algebra import profile_str
from pkaequiv.automaton import ValidationError, ensure_valid, measure_poly, validate_seed
from pkaequiv.decide import DecideConfig, ResourceLimitError, decide
from pkaequiv.oracle import find_witness, semantics_to_depth
from pkaequiv.problem import ParseError, load

EXIT_EQUIVALENT = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _word(alphabet, w) -> str:
    return "".join(alphabet[i] for i in w)


def profile_json(alphabet, profile) -> dict:
    return {_word(alphabet, w): e for w, e in profile}


def witness_json(alphabet, wit) -> dict | None:
    if wit is None:
        return None
    return {
        "depth": wit.depth,
        "profile": profile_json(alphabet, wit.profile),
        "left": str(wit.left),
        "right": str(wit.right),
    }


def _load(path, relaxed: bool):
    prob = load(path)
    aut = prob.automaton()
    ensure_valid(aut, strict=not relaxed)
    problems = validate_seed(prob.left, not relaxed, "left") + \
        validate_seed(prob.right, not relaxed, "right")
    if problems:
        raise ValidationError(problems)
    n = len(aut.states)
    return prob, aut, measure_poly(prob.left, n), measure_poly(prob.right, n)


def cmd_check(args) -> int:
    prob, aut, pl, pr = _load(args.file, args.relaxed)
    trace = None
    if args.trace:
        def trace(rec):
            print(f"stage {rec.stage}: expanded {rec.expanded}, derivatives {rec.derivatives}, "
                  f"adopted {rec.adopted}, basis {rec.basis_size}", file=sys.stderr)
    cfg = DecideConfig(
        strict_validation=not args.relaxed,
        max_stages=args.max_stages,
        witness_depth_cap=args.witness_cap,
        find_witness=not args.no_witness,
        trace=trace,
    )
    try:
        verdict = decide(aut, pl - pr, cfg, sides=(pl, pr))
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    if verdict.equivalent:
        payload = {"verdict": "equivalent", "stages": verdict.stages,
                   "generators": verdict.generators, "basis_size": verdict.basis_size,
                   "witness": None}
    else:
        payload = {"verdict": "not_equivalent", "stages": verdict.stage,
                   "generators": verdict.generators, "basis_size": verdict.basis_size,
                   "witness": witness_json(aut.alphabet, verdict.witness)}

    if args.json:
        print(json.dumps(payload))
    elif verdict.equivalent:
        print(f"equivalent after {verdict.stages} stage(s); "
              f"{verdict.generators} generator(s), basis size {verdict.basis_size}")
        for b in verdict.basis or ():
            print(f"  {aut.format(b)}")
    else:
        path = " ".join(f"{aut.alphabet[a]}/eps^{n}" for a, n in verdict.derivation_path)
        print(f"not equivalent at stage {verdict.stage}")
        print(f"  failing polynomial: {aut.format(verdict.failing_polynomial)}")
        print(f"  derivation path: {path or '(seed)'}")
        wit = verdict.witness
        if wit is not None:
            print(f"  witness at depth {wit.depth}: {profile_str(wit.profile, aut.alphabet)} "
                  f"left {wit.left} right {wit.right}")
    return EXIT_EQUIVALENT if verdict.equivalent else EXIT_NOT_EQUIVALENT


def cmd_semantics(args) -> int:
    prob, aut, pl, pr = _load(args.file, args.relaxed)
    sem = semantics_to_depth(aut, pl if args.side == "left" else pr, args.depth)
    rows = sem.rows()
    if args.json:
        print(json.dumps({
            "side": args.side,
            "depth": args.depth,
            "rows": [{"profile": profile_json(aut.alphabet, prof), "value": str(v)}
                     for prof, v in rows],
        }))
    else:
        for prof, v in rows:
            label = profile_str(prof, aut.alphabet)
            print(f"{label if not prof else '(' + label + ')'} = {v}")
    return 0


def cmd_witness(args) -> int:
    prob, aut, pl, pr = _load(args.file, args.relaxed)
    wit = find_witness(aut, pl, pr, args.cap)
    if args.json:
        print(json.dumps({"witness": witness_json(aut.alphabet, wit)}))
    elif wit is None:
        print(f"no separating profile up to depth {args.cap}")
    else:
        print(f"depth {wit.depth}: {profile_str(wit.profile, aut.alphabet)} "
              f"left {wit.left} right {wit.right}")
    return 0 if wit is not None else 1


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pkaequiv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide equivalence of the left and right measures")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--relaxed", action="store_true", help="allow signed measures")
    p.add_argument("--no-witness", action="store_true")
    p.add_argument("--witness-cap", type=_positive, default=8)
    p.add_argument("--max-stages", type=_positive, default=10_000)
    p.add_argument("--trace", action="store_true", help="per-stage summary on stderr")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("semantics", help="print truncated semantics of one side")
    p.add_argument("file")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("--depth", type=_positive, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--relaxed", action="store_true")
    p.set_defaults(func=cmd_semantics)

    p = sub.add_parser("witness", help="search for a separating profile")
    p.add_argument("file")
    p.add_argument("--cap", type=_positive, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--relaxed", action="store_true")
    p.set_defaults(func=cmd_witness)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        return args.func(args)
    except (ParseError, ValidationError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

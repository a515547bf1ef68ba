"""Command-line front end.

Exit codes: 0 ok, 1 invariant violation or validation failure, 2 usage or
parse error.
"""
from __future__ import annotations

import argparse
import sys

from . import canonical
from .classifier import classify2, classify3, describe
from .errors import ExhaustedAttempts, NonGeneric, ParseError, ValidationError
from .fileformat import export_obj, parse_linking, serialize_linking
from .fuzz import DEFAULT_MOVES, DEFAULT_SCALE, DEFAULT_TRIALS, run_bordef_equivalence, run_isotopy_fuzz
from .invariants import is_borromean, is_borromean_reduced, linking_parity, pairwise_parities
from .kernel import point, scalar, triple_common_point
from .moves import MoveSpec, apply_move, validate_move

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _bool(v):
    return "true" if v else "false"


def _signature(L):
    """One-line raw invariant signature, stable for scripts."""
    try:
        pars = pairwise_parities(L)
    except NonGeneric as exc:
        return f"parity=NonGeneric pair={exc.pair}"
    if len(L) == 2:
        return f"parity={pars[(0, 1)]}"
    prof = "{" + ",".join(str(v) for v in sorted(pars.values(), reverse=True)) + "}"
    return f"parity={prof} borromean={_bool(is_borromean(L))}"


def cmd_classify(args):
    L = parse_linking(_read(args.file))
    if len(L) == 2:
        print(classify2(L[0], L[1]).value)
    else:
        print(describe(classify3(L)))
    print(_signature(L))
    return EXIT_OK


def cmd_invariants(args):
    L = parse_linking(_read(args.file))
    for (i, j) in ((0, 1), (0, 2), (1, 2))[: 1 if len(L) == 2 else 3]:
        try:
            val = linking_parity(L[i], L[j])
        except NonGeneric as exc:
            val = f"NonGeneric ({exc})"
        print(f"parity[{i},{j}] = {val}")
    if len(L) == 3:
        print(_signature(L))
        print(f"is_borromean = {_bool(is_borromean(L))}")
        print(f"is_borromean_reduced = {_bool(is_borromean_reduced(L))}")
        print(f"triple_common_point = {_bool(triple_common_point(*L))}")
    return EXIT_OK


def cmd_generate(args):
    _write(args.output, serialize_linking(canonical.BY_NAME[args.name]()))
    return EXIT_OK


def cmd_move(args):
    L = parse_linking(_read(args.file))
    m = MoveSpec(args.target, args.pivot, point(*map(scalar, args.apex)))
    if not (0 <= m.target < len(L) and 0 <= m.pivot < 3):
        print(f"target/pivot out of range: {m.target}, {m.pivot}", file=sys.stderr)
        return EXIT_USAGE
    verdict = validate_move(L, m)
    print(verdict, file=sys.stderr if args.output in (None, "-") else sys.stdout)
    if not verdict.valid:
        return EXIT_FAIL
    _write(args.output, serialize_linking(apply_move(L, m)))
    return EXIT_OK


def _emit_report(report, args):
    _write(args.output, report.to_json() + "\n")
    print(f"wall time: {report.wall_time:.2f} s", file=sys.stderr)
    if report.error:
        print(report.error, file=sys.stderr)
    if report.violations:
        print(f"{len(report.violations)} violation(s)", file=sys.stderr)
    return EXIT_OK if report.ok and not report.error else EXIT_FAIL


def cmd_fuzz(args):
    L = parse_linking(_read(args.file))
    report = run_isotopy_fuzz(L, args.moves, args.seed, scalar(args.scale))
    if args.moves_out:
        _write(args.moves_out, "".join(f'{s["move"]}\n' for s in report.steps if s["move"]))
    return _emit_report(report, args)


def cmd_bordef(args):
    return _emit_report(run_bordef_equivalence(args.trials, args.seed, scalar(args.scale)), args)


def cmd_export_obj(args):
    _write(args.output, export_obj(parse_linking(_read(args.file))))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="trilink", description="Exact invariants of triangle linkings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="print the isotopy class label and invariant signature")
    s.add_argument("file", help="linking file, or - for stdin")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("invariants", help="parities and Borromean predicates")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("generate", help="write a canonical linking")
    s.add_argument("name", choices=sorted(canonical.BY_NAME))
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("move", help="validate and apply an elementary move")
    s.add_argument("file")
    s.add_argument("--target", type=int, required=True)
    s.add_argument("--pivot", type=int, required=True)
    s.add_argument("--apex", nargs=3, required=True, metavar=("X", "Y", "Z"))
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_move)

    s = sub.add_parser("fuzz", help="random move sequence, checking invariants at every step")
    s.add_argument("file")
    s.add_argument("--moves", type=int, default=DEFAULT_MOVES)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--scale", default=str(DEFAULT_SCALE))
    s.add_argument("--moves-out", help="also write the applied move list")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_fuzz)

    s = sub.add_parser("bordef-check", help="compare full and reduced Borromean predicates")
    s.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--scale", default=str(DEFAULT_SCALE))
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_bordef)

    s = sub.add_parser("export-obj", help="OBJ polylines for a 3D viewer (lossy)")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_export_obj)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExhaustedAttempts as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

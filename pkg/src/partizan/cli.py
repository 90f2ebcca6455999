"""Command-line interface: ``partizan <command> ...``.

Exit codes: 0 success (or a check came out true), 1 a check came out false,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import game as G
from .notation import ValueSyntaxError, format_game, parse_game
from .reductions import ReductionError, TARGETS, certify_reduction, tree_isomorphic
from .rulesets import PositionSyntaxError, TTPosition, parse_position, render_diagram, render_position, to_game
from .universality import down_path, realize_search, up_path


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    try:
        return parse_position(text)
    except PositionSyntaxError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_tt(path: str) -> TTPosition:
    pos = _load(path)
    if not isinstance(pos, TTPosition):
        raise UsageError(f"{path}: expected a turning-tiles position")
    return pos


def cmd_eval(args) -> int:
    g = to_game(_load(args.file))
    print(f"outcome: {G.outcome(g).value}")
    print(f"value: {format_game(g)}")
    return 0


def cmd_reduce(args) -> int:
    pos = _load_tt(args.file)
    try:
        mapped = TARGETS[args.to](pos)
    except ReductionError as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.write(render_position(mapped))
    return 0


def cmd_check_iso(args) -> int:
    iso = tree_isomorphic(to_game(_load(args.file_a)), to_game(_load(args.file_b)))
    print(f"isomorphic: {'true' if iso else 'false'}")
    return 0 if iso else 1


def cmd_certify(args) -> int:
    pos = _load_tt(args.file)
    ok = True
    for i, target in enumerate(("gol", "btd")):
        try:
            cert = certify_reduction(pos, target)
        except ReductionError as exc:
            raise UsageError(str(exc)) from exc
        if i:
            print()
        sys.stdout.write(cert.render())
        ok = ok and cert.isomorphic
    return 0 if ok else 1


def cmd_delta_path(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    sys.stdout.write(render_position((up_path if args.up else down_path)(args.n)))
    return 0


def cmd_realize(args) -> int:
    try:
        target = parse_game(args.value)
    except ValueSyntaxError as exc:
        raise UsageError(str(exc)) from exc
    if min(args.max_width, args.max_height, args.max_pieces) < 1:
        raise UsageError("search bounds must be positive")
    if not G.is_dicotic(G.canonicalize(target)):
        raise UsageError(f"target {format_game(target)} is not dicotic")
    result = realize_search(target, args.max_width, args.max_height, args.max_pieces)
    sys.stdout.write(result.render())
    return 0 if result.found else 1


def cmd_render(args) -> int:
    sys.stdout.write(render_diagram(_load(args.file)))
    return 0


def cmd_selftest(args) -> int:
    from .selftest import SUITES

    failed = 0
    for name, suite in SUITES.items():
        start = time.perf_counter()
        passed, total = suite()
        status = "ok" if passed == total else "FAIL"
        failed += passed != total
        print(f"{name}: {passed}/{total} {status}")
        print(f"  {name} took {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partizan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="outcome and canonical value of a position file")
    p.add_argument("file")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("reduce", help="map a turning-tiles position to another ruleset")
    p.add_argument("--to", choices=sorted(TARGETS), required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check-iso", help="compare the game trees of two positions")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_check_iso)

    p = sub.add_parser("certify", help="certify both reductions of a turning-tiles position")
    p.add_argument("file")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("delta-path", help="print the staircase position of value n.v (or n.^ with --up)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--up", action="store_true")
    p.set_defaults(func=cmd_delta_path)

    p = sub.add_parser("realize", help="search small δ-beyond-the-door boards for a value")
    p.add_argument("--value", required=True)
    p.add_argument("--max-width", type=int, default=2)
    p.add_argument("--max-height", type=int, default=2)
    p.add_argument("--max-pieces", type=int, default=1)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("render", help="draw a position")
    p.add_argument("file")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("selftest", help="run the built-in property suites")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"partizan: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))
    sys.exit(run())

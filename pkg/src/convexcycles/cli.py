"""Command-line surface.

Exit codes: 0 success, 1 input error, 2 cap exceeded, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from convexcycles import distance, formats, render, solver, transforms
from convexcycles.instance import (
    CapExceededError,
    ConvexInstance,
    InputError,
    InternalError,
    extremal_instance,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2
EXIT_INTERNAL = 3


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_instance(path: str) -> ConvexInstance:
    return formats.parse_instance(_read_text(path))


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {out}: {exc}") from None


def _cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    if args.all_optima:
        optima = solver.list_all_optima(inst, cap=args.cap)
        lines = [formats.emit_report(tf, args.format) for tf in optima]
        _write_output("".join(lines), args.out)
        return EXIT_OK
    if args.brute:
        result = solver.min_crossings_bruteforce(inst, cap=args.cap)
    else:
        result = solver.min_crossings_bnb(inst, node_budget=args.budget)
    _write_output(formats.emit_report(result, args.format), args.out)
    return EXIT_OK


def _cmd_heuristic(args) -> int:
    inst = _load_instance(args.instance)
    if args.seq is None:
        tf = transforms.construct_k3(inst)
        _write_output(formats.emit_report(tf, args.format), args.out)
        return EXIT_OK
    seq = formats.parse_transpositions(_read_text(args.seq))
    result = transforms.unwind_transpositions(inst, seq, mode=args.mode)
    _write_output(formats.emit_report(result, args.format), args.out)
    return EXIT_OK


def _cmd_uncross(args) -> int:
    inst = _load_instance(args.instance)
    tf = formats.parse_two_factor(_read_text(args.two_factor), inst)
    result = transforms.uncross_all(tf)
    _write_output(formats.emit_report(result, args.format), args.out)
    return EXIT_OK


def _cmd_fdist(args) -> int:
    inst = _load_instance(args.instance)
    result = distance.transposition_distance(inst, cap=args.cap)
    _write_output(formats.emit_report(result, args.format), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = _load_instance(args.instance)
    report = distance.verify_bounds(inst, solver=args.solver)
    _write_output(formats.emit_report(report, args.format), args.out)
    return EXIT_OK


def _cmd_extremal(args) -> int:
    inst = extremal_instance(args.n)
    tf = distance.extremal_two_factor(args.n)
    if args.format == "text":
        text = (
            formats.serialize_instance(inst)
            + formats.serialize_two_factor(tf)
            + f"crossings: {tf.crossing_count}\n"
        )
    else:
        text = formats.emit_report(tf, args.format)
    _write_output(text, args.out)
    return EXIT_OK


def _cmd_scan(args) -> int:
    report = distance.scan_instances(args.k, args.n)
    _write_output(formats.emit_report(report, args.format), args.out)
    return EXIT_OK


def _cmd_render(args) -> int:
    inst = _load_instance(args.instance)
    tf = None
    if args.two_factor is not None:
        tf = formats.parse_two_factor(_read_text(args.two_factor), inst)
    _write_output(render.render_svg(inst, tf), args.out)
    return EXIT_OK


def _add_common(sub, out_default=None) -> None:
    sub.add_argument("--format", choices=["text", "json"], default="text")
    sub.add_argument("--out", default=out_default, help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexcycles",
        description="Minimum-crossing cycling 2-factors on convex point sets",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("solve", help="exact minimum crossing count")
    p.add_argument("instance")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--brute", action="store_true", help="full enumeration")
    group.add_argument("--bnb", action="store_true", help="branch and bound (default)")
    p.add_argument("--cap", type=int, default=solver.DEFAULT_ENUM_CAP)
    p.add_argument("--budget", type=int, default=solver.DEFAULT_NODE_BUDGET)
    p.add_argument("--all-optima", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_solve)

    p = subs.add_parser("heuristic", help="constructive bounded 2-factor")
    p.add_argument("instance")
    p.add_argument("--seq", help="transposition sequence file to unwind")
    p.add_argument("--mode", choices=["generic", "k3"], default="generic")
    _add_common(p)
    p.set_defaults(func=_cmd_heuristic)

    p = subs.add_parser("uncross", help="uncross same-class-pair edges to a fixpoint")
    p.add_argument("instance")
    p.add_argument("two_factor")
    _add_common(p)
    p.set_defaults(func=_cmd_uncross)

    p = subs.add_parser("fdist", help="exact transposition distance")
    p.add_argument("instance")
    p.add_argument("--cap", type=int, default=distance.DEFAULT_STATE_CAP)
    _add_common(p)
    p.set_defaults(func=_cmd_fdist)

    p = subs.add_parser("verify", help="check the crossing bounds")
    p.add_argument("instance")
    p.add_argument("--solver", choices=["brute", "bnb"], default="bnb")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("extremal", help="contiguous-block instance and its optimum")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_extremal)

    p = subs.add_parser("scan", help="verify bounds over all sequences of a shape")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_scan)

    p = subs.add_parser("render", help="SVG drawing of an instance or 2-factor")
    p.add_argument("instance")
    p.add_argument("--two-factor")
    _add_common(p)
    p.set_defaults(func=_cmd_render)

    return parser


def cli_main(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001  - map anything unexpected to exit 3
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()

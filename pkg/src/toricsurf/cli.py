"""Command-line interface.

Subcommands: validate, normalize, int, cup, verify, present, reduce,
random. Input is a JSON fan/polygon document (or a plain ray list with
--plain); "-" reads stdin. Output formats: aligned table (default),
json, latex (pmatrix bodies). Exit codes: 0 success, 1 usage error,
2 parse or validation error, 3 duality violation found by verify.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cellular import cup_matrix
from .chow import intersection_matrix, presentation, reduce_quadratic
from .documents import (
    document_to_fan,
    document_to_json,
    FanDocument,
    fraction_str,
    linear_form_str,
    load_document,
    matrix_json,
    matrix_latex,
    matrix_table,
    rays_table,
)
from .duality import batch_verify, verify_duality
from .errors import ToricSurfError
from .fan import normalize, random_complete_fan
from .matrix import RationalMatrix


class UsageError(Exception):
    """Bad command line (unknown flag, malformed value, missing argument)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _pair_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected I,J but got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integer pair I,J but got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "table", "latex"), default="table",
                     help="output format (default: table)")
    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("file", metavar="FILE",
                     help="input document path, or - for stdin")
    src.add_argument("--plain", action="store_true",
                     help="read input as a whitespace-separated ray list")

    parser = _Parser(prog="toricsurf",
                     description="Exact intersection and cup product matrices "
                                 "of complete toric surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", parents=[src, fmt],
                       help="check that the input is a complete fan")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("normalize", parents=[src, fmt],
                       help="move a pivot ray to (1, 0) by relabeling and basis change")
    p.add_argument("--pivot", type=int, default=None, metavar="K",
                   help="1-based ray to send to (1, 0); default: second to last")
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser("int", parents=[src, fmt],
                       help="intersection product matrix")
    p.set_defaults(handler=_cmd_int)

    p = sub.add_parser("cup", parents=[src, fmt],
                       help="cellular cup product matrix (normalized fans)")
    p.set_defaults(handler=_cmd_cup)

    p = sub.add_parser("verify", parents=[src, fmt],
                       help="check that the two product matrices multiply to the identity")
    p.add_argument("--oracle", action="store_true",
                   help="also compare against independent matrix inversion")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("present", parents=[src, fmt],
                       help="ring presentation: linear relations and vanishing products")
    p.set_defaults(handler=_cmd_present)

    p = sub.add_parser("reduce", parents=[src, fmt],
                       help="reduce the product of two divisor classes to a number")
    p.add_argument("--pair", type=_pair_arg, required=True, metavar="I,J",
                   help="1-based ray indices of the product to reduce")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("random", parents=[fmt],
                       help="generate a random complete fan, or run a verification batch")
    p.add_argument("--rays", type=int, required=True, metavar="N",
                   help="number of rays (at least 3)")
    p.add_argument("--bound", type=int, required=True, metavar="B",
                   help="coordinate bound for sampled rays (at least 1)")
    p.add_argument("--seed", type=int, required=True, metavar="S",
                   help="random seed")
    p.add_argument("--trials", type=int, default=None, metavar="T",
                   help="instead of printing one fan, verify T random fans")
    p.set_defaults(handler=_cmd_random)

    return parser


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _load_fan(args):
    return document_to_fan(load_document(args.file, plain=args.plain))


def _emit_matrix(name: str, matrix, fmt: str) -> None:
    if fmt == "json":
        _print_json({name: matrix_json(matrix)})
    elif fmt == "latex":
        print(matrix_latex(matrix))
    else:
        print(f"{name}:")
        print(matrix_table(matrix))


def _cmd_validate(args) -> int:
    fan = _load_fan(args)
    rays = [list(r) for r in fan.rays]
    if args.format == "json":
        _print_json({"valid": True, "ray_count": fan.ray_count, "rays": rays})
    elif args.format == "latex":
        print(f"% valid fan with {fan.ray_count} rays")
        print(matrix_latex(RationalMatrix(rays)))
    else:
        print(f"valid fan with {fan.ray_count} rays (basis size {fan.basis_size})")
        print(rays_table(fan.rays))
    return 0


def _cmd_normalize(args) -> int:
    fan = _load_fan(args)
    normalized, basis_map, shift = normalize(fan, args.pivot)
    map_rows = [list(row) for row in basis_map.rows()]
    if args.format == "json":
        _print_json({"rays": [list(r) for r in normalized.rays],
                     "map": map_rows, "shift": shift})
    elif args.format == "latex":
        print(matrix_latex(RationalMatrix([list(r) for r in normalized.rays])))
        print(matrix_latex(RationalMatrix(map_rows)))
        print(f"% shift: {shift}")
    else:
        print("normalized rays:")
        print(rays_table(normalized.rays))
        print(f"map: {map_rows[0]} {map_rows[1]}")
        print(f"shift: {shift}")
    return 0


def _cmd_int(args) -> int:
    _emit_matrix("m_int", intersection_matrix(_load_fan(args)), args.format)
    return 0


def _cmd_cup(args) -> int:
    _emit_matrix("m_cup", cup_matrix(_load_fan(args)), args.format)
    return 0


def _cmd_verify(args) -> int:
    report = verify_duality(_load_fan(args), with_oracle=args.oracle)
    failed = (not report.identity_holds) or report.oracle_agrees is False
    if args.format == "json":
        payload = {"m_int": matrix_json(report.m_int),
                   "m_cup": matrix_json(report.m_cup),
                   "product": matrix_json(report.product),
                   "identity": report.identity_holds}
        if args.oracle:
            payload["oracle_agrees"] = report.oracle_agrees
        _print_json(payload)
    elif args.format == "latex":
        for label, matrix in (("m_int", report.m_int), ("m_cup", report.m_cup),
                              ("product", report.product)):
            print(f"% {label}")
            print(matrix_latex(matrix))
        print(f"% identity: {'true' if report.identity_holds else 'false'}")
    else:
        for label, matrix in (("m_int", report.m_int), ("m_cup", report.m_cup),
                              ("product", report.product)):
            print(f"{label}:")
            print(matrix_table(matrix))
        print(f"identity: {'true' if report.identity_holds else 'false'}")
        if args.oracle:
            print(f"oracle agrees: {'true' if report.oracle_agrees else 'false'}")
    return 3 if failed else 0


def _cmd_present(args) -> int:
    pres = presentation(_load_fan(args))
    if args.format == "json":
        _print_json({"linear_forms": [list(row) for row in pres.linear_forms],
                     "nonadjacent_pairs": [list(p) for p in pres.nonadjacent_pairs]})
    elif args.format == "latex":
        print(matrix_latex(RationalMatrix([list(r) for r in pres.linear_forms])))
        pairs = " ".join(f"({i},{j})" for i, j in pres.nonadjacent_pairs)
        print(f"% nonadjacent pairs: {pairs if pairs else 'none'}")
    else:
        print("linear relations:")
        for row in pres.linear_forms:
            print(f"  {linear_form_str(row)} = 0")
        if pres.nonadjacent_pairs:
            products = "  ".join(f"x{i}*x{j}" for i, j in pres.nonadjacent_pairs)
            print("vanishing products:")
            print(f"  {products}")
        else:
            print("vanishing products: none")
    return 0


def _cmd_reduce(args) -> int:
    fan = _load_fan(args)
    i, j = args.pair
    k = fan.ray_count
    for idx in (i, j):
        if not 1 <= idx <= k:
            raise IndexError(f"ray index {idx} out of range 1..{k}")
    unit = [[0] * k for _ in range(k)]
    unit[i - 1][j - 1] = 1
    value = reduce_quadratic(fan, unit)
    if args.format == "json":
        _print_json({"pair": [i, j], "value": fraction_str(value)})
    else:
        print(f"pair: ({i}, {j})")
        print(f"coefficient: {fraction_str(value)}")
    return 0


def _cmd_random(args) -> int:
    if args.trials is not None:
        if args.trials < 0:
            raise UsageError(f"--trials must be nonnegative, got {args.trials}")
        try:
            summary = batch_verify(args.trials, (args.rays, args.rays),
                                   args.bound, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        elapsed_ms = round(summary.elapsed * 1000)
        if args.format == "json":
            _print_json({"trials": summary.trials,
                         "failures": len(summary.failures),
                         "generation_failures": summary.generation_failures,
                         "elapsed_ms": elapsed_ms,
                         "all_passed": summary.all_passed})
        else:
            print(f"trials: {summary.trials}")
            print(f"failures: {len(summary.failures)}")
            print(f"generation failures: {summary.generation_failures}")
            print(f"elapsed: {elapsed_ms} ms")
            print(f"all passed: {'true' if summary.all_passed else 'false'}")
        return 0 if summary.all_passed else 3
    try:
        fan = random_complete_fan(args.rays, args.bound, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _print_json(document_to_json(FanDocument(tuple(tuple(r) for r in fan.rays))))
    elif args.format == "latex":
        print(matrix_latex(RationalMatrix([list(r) for r in fan.rays])))
    else:
        print(rays_table(fan.rays))
    return 0


def run_command(argv: list[str]) -> int:
    """Parse argv (without the program name), run a subcommand, and
    return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        # --help prints and exits 0; keep that behavior without exiting
        # the caller.
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ToricSurfError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

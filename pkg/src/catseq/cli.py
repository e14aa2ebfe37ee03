"""Command-line driver.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 on success,
1 for malformed input (parse or validation failures, bad usage), 2 for
domain errors (a valid sequence outside a partial codec's image).
"""

from __future__ import annotations

import argparse
import sys

from . import counting, core, families, render
from .core import CatalanError, DomainError, validate
from .trees import decode_tree

_METHODS = ("closed", "convolution", "linear", "series")


class _Parser(argparse.ArgumentParser):
    # bad usage is malformed input: exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catseq", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("count", parents=[], help="print the n-th Catalan number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=_METHODS, default="closed")
    p.set_defaults(handler=_cmd_count)

    p = commands.add_parser("enumerate", help="print all sequences of semilength n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_enumerate)

    p = commands.add_parser("validate", help="check a 0/1 word for the Catalan conditions")
    p.add_argument("bits")
    p.set_defaults(handler=_cmd_validate)

    p = commands.add_parser("encode", help="encode a family object into a sequence")
    p.add_argument("--family", required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(handler=_cmd_encode)

    p = commands.add_parser("decode", help="decode a sequence into a family object")
    p.add_argument("--family", required=True)
    p.add_argument("bits")
    p.set_defaults(handler=_cmd_decode)

    p = commands.add_parser("transcode", help="convert one family's text into another's")
    p.add_argument("--from", dest="source", required=True, metavar="FAMILY")
    p.add_argument("--to", dest="target", required=True, metavar="FAMILY")
    p.add_argument("--input", required=True)
    p.set_defaults(handler=_cmd_transcode)

    p = commands.add_parser("rank", help="0-based lexicographic rank of a sequence")
    p.add_argument("bits")
    p.set_defaults(handler=_cmd_rank)

    p = commands.add_parser("unrank", help="the k-th sequence of semilength n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(handler=_cmd_unrank)

    p = commands.add_parser("random", help="seeded uniform random sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=_cmd_random)

    p = commands.add_parser("render", help="draw a sequence as text")
    p.add_argument("--format", choices=("mountain", "dot"), required=True)
    p.add_argument("bits")
    p.set_defaults(handler=_cmd_render)

    return parser


def _cmd_count(args) -> int:
    if args.method == "closed":
        value = counting.catalan_closed(args.n)
    elif args.method == "convolution":
        value = counting.catalan_convolution(args.n)
    elif args.method == "linear":
        value = counting.catalan_linear(args.n)
    else:
        if args.n < 0:
            raise CatalanError("Catalan numbers are indexed from 0")
        value = counting.catalan_series(args.n + 1).coefficients[args.n]
    print(value)
    return 0


def _cmd_enumerate(args) -> int:
    for s in core.enumerate_sequences(args.n):
        print(s.bits)
    return 0


def _cmd_validate(args) -> int:
    s = validate(args.bits)
    print(f"valid semilength={s.semilength}")
    return 0


def _cmd_encode(args) -> int:
    fam = families.resolve(args.family)
    print(fam.encode(fam.parse(args.input)).bits)
    return 0


def _cmd_decode(args) -> int:
    fam = families.resolve(args.family)
    print(fam.render(fam.decode(validate(args.bits))))
    return 0


def _cmd_transcode(args) -> int:
    print(families.transcode(args.source, args.target, args.input))
    return 0


def _cmd_rank(args) -> int:
    print(core.rank(validate(args.bits)))
    return 0


def _cmd_unrank(args) -> int:
    print(core.unrank(args.n, args.index).bits)
    return 0


def _cmd_random(args) -> int:
    print(core.random_uniform(args.n, args.seed).bits)
    return 0


def _cmd_render(args) -> int:
    s = validate(args.bits)
    if args.format == "mountain":
        for line in render.render_mountain(s):
            print(line)
    else:
        print(render.render_dot(decode_tree(s)))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"catseq: domain error: {exc}", file=sys.stderr)
        return 2
    except CatalanError as exc:
        print(f"catseq: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

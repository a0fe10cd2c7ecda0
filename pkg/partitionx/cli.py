# Copyright (c) 2023-2024 partitionx developers

# This library is free software: you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation version 3.
#
# This library is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this library.  If not, see <http://www.gnu.org/licenses/>.

"""Command-line interface of partitionx

Usage::

    partitionx [--output MODE] [--seed N] COMMAND ...

Commands and the output modes they support:

============  ==================  ===========================================
command       modes               prints
============  ==================  ===========================================
mul           text, json          product of the literals
inv           text, json          inverse of the literal
supernorm     text, json          supernorm as ``num/den``
factor        text, json          overpartition with the given supernorm
stats         text, json          statistics of the literal
member        text, json          ``true`` or ``false``
quotient      text, json          image in the quotient group
enumerate     text, json, csv     partitions, overpartitions or count tables
verify        text, json, csv     formula against brute force per ``n``
lattice       dot, text, json     partition lattice, ``text`` same as ``dot``
============  ==================  ===========================================

Overpartition literals are either ``<1^2 2^-3>`` or overline lists such as
``~3,2,2,2,1,1``. Exit status is 0 on success, 1 if a verification fails
and 2 on usage or parse errors.
"""
import argparse
import json
import sys

import partitionx
from partitionx.core import pxsys
from partitionx.core.enumerate import (
    count_size_kernel_pairs_formula,
    lattice_levels,
    overpartition_count,
    overpartitions_of,
    partition_count,
    partitions_of
)
from partitionx.core.errors import PartitionError, VerificationError
from partitionx.core.homs import (
    KINDS,
    SubgroupSpec,
    is_member,
    quotient_image,
    stats
)
from partitionx.core.overpartition import (
    BaseMultiplicities,
    format_text,
    inverse,
    parse_any,
    product,
    to_json_obj
)
from partitionx.core.supernorm import (
    factor_to_overpartition,
    format_rational,
    supernorm_over
)
from partitionx.core.verify import VERIFIERS
from partitionx.io.dot import lattice_to_dot
from partitionx.io import pandasio
from partitionx import serialize

OUTPUT_MODES = ("text", "json", "csv", "dot")

STREAMS = {
    "partitions": partitions_of,
    "overpartitions": overpartitions_of
}

COUNTS = {
    "pn": partition_count,
    "overcount": overpartition_count,
    "pairs": count_size_kernel_pairs_formula
}


class UsageError(PartitionError):
    """Error raised when a command is used with an unsupported option."""


def _literal(text):
    return parse_any(text)


def _check_mode(args, *modes):
    if args.output not in modes:
        raise UsageError(
            "%s does not support --output %s" % (args.command, args.output))


def _print_json(obj, out):
    print(json.dumps(obj), file=out)


def _print_overpartition(args, value, out):
    _check_mode(args, "text", "json")
    if args.output == "json":
        _print_json(to_json_obj(value), out)
    else:
        print(format_text(value), file=out)


# --------------------------------------------------------------------------
# Commands

def cmd_mul(args, out):
    value = product(_literal(text) for text in args.literals)
    _print_overpartition(args, value, out)
    return 0


def cmd_inv(args, out):
    _print_overpartition(args, inverse(_literal(args.literal)), out)
    return 0


def cmd_supernorm(args, out):
    _check_mode(args, "text", "json")
    text = format_rational(supernorm_over(_literal(args.literal)))
    if args.output == "json":
        _print_json(text, out)
    else:
        print(text, file=out)
    return 0


def cmd_factor(args, out):
    _print_overpartition(args, factor_to_overpartition(args.rational), out)
    return 0


def cmd_stats(args, out):
    _check_mode(args, "text", "json")
    value = _literal(args.literal)
    report = serialize.stats_to_json(stats(value), overpartition=value)
    if args.output == "json":
        _print_json(report, out)
    else:
        for key, item in report.items():
            if key == "multiplicities":
                item = " ".join("%s^%s" % kv for kv in item.items()) or "-"
            print("%s: %s" % (key, item), file=out)
    return 0


def _subgroup(args):
    return SubgroupSpec.from_args(args.kind, args.param)


def cmd_member(args, out):
    _check_mode(args, "text", "json")
    result = is_member(_literal(args.literal), _subgroup(args))
    if args.output == "json":
        _print_json(result, out)
    else:
        print("true" if result else "false", file=out)
    return 0


def cmd_quotient(args, out):
    _check_mode(args, "text", "json")
    image = quotient_image(_literal(args.literal), _subgroup(args))
    if isinstance(image, BaseMultiplicities):
        _print_overpartition(args, image, out)
    elif args.output == "json":
        _print_json(image, out)
    else:
        print(image, file=out)
    return 0


def cmd_enumerate(args, out):
    if args.what in STREAMS:
        _check_mode(args, "text", "json", "csv")
        stream = STREAMS[args.what](args.n)
        if args.output == "csv":
            out.write(pandasio.to_csv(pandasio.stream_table(stream, args.n)))
        elif args.output == "json":
            _print_json([to_json_obj(value) for value in stream], out)
        else:
            for value in stream:
                print(format_text(value), file=out)
    else:
        _check_mode(args, "text", "json", "csv")
        frame = pandasio.count_table(COUNTS[args.what], args.n)
        if args.output == "csv":
            out.write(pandasio.to_csv(frame))
        elif args.output == "json":
            _print_json(
                [{"n": n, "value": str(v)}
                 for n, v in zip(frame["n"], frame["value"])], out)
        else:
            for n, v in zip(frame["n"], frame["value"]):
                print("%s: %s" % (n, v), file=out)
    return 0


def _format_table(rows):
    header = ("n", "formula", "bruteforce", "status")
    body = [(str(r.n), str(r.formula), str(r.bruteforce),
             "MATCH" if r.match else "MISMATCH") for r in rows]
    widths = [max(len(line[i]) for line in [header] + body)
              for i in range(len(header))]
    return [
        "  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip()
        for line in [header] + body
    ]


def cmd_verify(args, out):
    _check_mode(args, "text", "json", "csv")
    verifier = VERIFIERS[args.identity]
    if args.identity == "isomorphism":
        rows = verifier(args.n_max, seed=args.seed)
    else:
        rows = verifier(args.n_max)

    failed = [row for row in rows if not row.match]
    if args.output == "json":
        _print_json(serialize.rows_to_json(rows), out)
    elif args.output == "csv":
        out.write(pandasio.to_csv(pandasio.rows_to_frame(rows)))
    else:
        for line in _format_table(rows):
            print(line, file=out)
        if failed:
            print("%s: %d of %d rows MISMATCH"
                  % (args.identity, len(failed), len(rows)), file=out)
        else:
            print("%s: all %d rows MATCH"
                  % (args.identity, len(rows)), file=out)

    if failed:
        raise VerificationError(
            "%s failed at n=%s" % (args.identity, failed[0].n))
    return 0


def cmd_lattice(args, out):
    _check_mode(args, "text", "dot", "json")
    pxsys.check_lattice_limits(args.depth, args.max_part)
    lattice = lattice_levels(args.depth, args.max_part)
    if args.output == "json":
        _print_json(serialize.lattice_to_json(lattice), out)
    else:
        out.write(lattice_to_dot(lattice))
    return 0


# --------------------------------------------------------------------------
# Parser

def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative: %s" % text)
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive: %s" % text)
    return value


def build_parser():

    # Options repeated after the command must not reset the global ones.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", choices=OUTPUT_MODES,
                        default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="partitionx",
        description="Multiplicative group theory of overpartitions")
    parser.add_argument("--version", action="version",
                        version="partitionx " + partitionx.__version__)
    parser.add_argument("--output", "-o", choices=OUTPUT_MODES,
                        default="text", help="output mode (default: text)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed of sampled runs (default: 0)")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("mul", parents=[common],
                       help="multiply overpartitions")
    p.add_argument("literals", nargs="+", metavar="LITERAL")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("inv", parents=[common], help="invert an overpartition")
    p.add_argument("literal", metavar="LITERAL")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("supernorm", parents=[common],
                       help="supernorm of an overpartition")
    p.add_argument("literal", metavar="LITERAL")
    p.set_defaults(func=cmd_supernorm)

    p = sub.add_parser("factor", parents=[common],
                       help="overpartition of a positive rational")
    p.add_argument("rational", metavar="NUM/DEN")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("stats", parents=[common],
                       help="statistics of an overpartition")
    p.add_argument("literal", metavar="LITERAL")
    p.set_defaults(func=cmd_stats)

    for name, func, helptext in (
            ("member", cmd_member, "subgroup membership"),
            ("quotient", cmd_quotient, "image in the quotient group")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("literal", metavar="LITERAL")
        p.add_argument("kind", choices=KINDS)
        p.add_argument("param", nargs="?", default=None, metavar="S|m",
                       help="comma-separated parts or modulus")
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", parents=[common],
                       help="enumerate or count partitions")
    p.add_argument("what", choices=tuple(STREAMS) + tuple(COUNTS))
    p.add_argument("n", type=_nonnegative)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common],
                       help="check an identity against brute force")
    p.add_argument("identity", choices=tuple(VERIFIERS))
    p.add_argument("n_max", type=_nonnegative,
                   help="largest n, or number of samples for isomorphism")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", parents=[common],
                       help="partition lattice in DOT")
    p.add_argument("depth", type=_nonnegative)
    p.add_argument("max_part", type=_positive, nargs="?", default=3)
    p.set_defaults(func=cmd_lattice)

    return parser


def main(argv=None, out=None):
    """Run the command line and return the exit status"""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code

    try:
        return args.func(args, out)
    except VerificationError as err:
        print("partitionx: %s" % err, file=sys.stderr)
        return 1
    except ValueError as err:
        print("partitionx: error: %s" % err, file=sys.stderr)
        return 2

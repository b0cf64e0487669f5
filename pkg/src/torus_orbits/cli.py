"""Command-line front end: count, enumerate, check, oeis.

Exit codes: 0 success/agreement, 1 verification mismatch or I/O
failure, 2 invalid arguments, 3 resource limit exceeded.
"""

import argparse
import itertools
import sys
from contextlib import nullcontext

from .canonical import iter_canonical_indices
from .codec import MatrixShape
from .counting import A179043, count_burnside
from .errors import CapacityError
from .formats import FORMATS, write_stream
from .sieve import DEFAULT_BUDGET_BITS
from .torus import code_at_index, iter_representative_indices

EXIT_OK = 0
EXIT_MISMATCH_OR_IO = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

_CHECK_MAX_CELLS = 20
_CHECK_SEQUENCE_MAX_CELLS = 16


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="torus-orbits",
        description="Enumerate and count binary matrices up to cyclic "
                    "row/column rotation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shape_args(p):
        p.add_argument("m", type=_positive_int, help="row count")
        p.add_argument("n", type=_positive_int, help="column count")
        p.add_argument("--memory-budget-bits", type=_positive_int,
                       default=DEFAULT_BUDGET_BITS,
                       help="visited-store budget for the sieve method")

    p_count = sub.add_parser("count", help="print the exact class count")
    add_shape_args(p_count)
    p_count.add_argument("--method", choices=("burnside", "sieve", "filter"),
                         default="burnside")

    p_enum = sub.add_parser("enumerate",
                            help="stream one representative per class")
    add_shape_args(p_enum)
    p_enum.add_argument("--method", choices=("sieve", "filter"),
                        default="sieve")
    p_enum.add_argument("--format", choices=FORMATS, default="lines",
                        dest="fmt")
    p_enum.add_argument("--out", default=None,
                        help="output path (default: standard output)")
    p_enum.add_argument("--limit", type=_positive_int, default=None,
                        help="emit at most this many representatives")

    p_check = sub.add_parser("check",
                             help="cross-verify all counting methods")
    add_shape_args(p_check)

    p_oeis = sub.add_parser("oeis",
                            help="check diagonal counts against A179043")
    p_oeis.add_argument("--max-n", type=int, default=len(A179043),
                        dest="max_n")
    return parser


def _representative_indices(shape, method, budget_bits):
    if method == "sieve":
        return iter_representative_indices(shape, budget_bits)
    return iter_canonical_indices(shape)


def cmd_count(args):
    shape = MatrixShape(args.m, args.n)
    if args.method == "burnside":
        value = count_burnside(shape).value
    else:
        value = sum(1 for _ in _representative_indices(
            shape, args.method, args.memory_budget_bits))
    print(value)
    return EXIT_OK


def cmd_enumerate(args):
    shape = MatrixShape(args.m, args.n)
    indices = _representative_indices(shape, args.method,
                                      args.memory_budget_bits)
    codes = (code_at_index(shape, w) for w in indices)
    sink = open(args.out, "w") if args.out else nullcontext(sys.stdout)
    with sink as out:
        if args.limit is None:
            emitted = write_stream(codes, args.fmt, out)
            exhausted = True
        else:
            emitted = write_stream(
                itertools.islice(codes, args.limit), args.fmt, out)
            exhausted = next(codes, None) is None
    summary = f"classes={emitted}" if exhausted else f"emitted={emitted}"
    print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_check(args):
    shape = MatrixShape(args.m, args.n)
    if shape.cells > _CHECK_MAX_CELLS:
        raise CapacityError(
            f"check enumerates exhaustively and is guarded at "
            f"{_CHECK_MAX_CELLS} cells"
        )
    counts = {"burnside": count_burnside(shape).value}
    sieve_indices = list(iter_representative_indices(
        shape, args.memory_budget_bits))
    filter_indices = list(iter_canonical_indices(shape))
    counts["sieve"] = len(sieve_indices)
    counts["filter"] = len(filter_indices)

    ok = len(set(counts.values())) == 1
    for method, value in counts.items():
        print(f"{method}: {value}")
    if shape.cells <= _CHECK_SEQUENCE_MAX_CELLS:
        if sieve_indices == filter_indices:
            print("representative sequences: identical")
        else:
            ok = False
            extra = sorted(set(sieve_indices) ^ set(filter_indices))
            print("representative sequences: MISMATCH")
            for w in extra[:20]:
                side = "sieve" if w in set(sieve_indices) else "filter"
                print(f"  only in {side}: {code_at_index(shape, w).rows}")
    if not ok:
        print("MISMATCH", file=sys.stderr)
        return EXIT_MISMATCH_OR_IO
    print("all methods agree")
    return EXIT_OK


def cmd_oeis(args):
    if not 1 <= args.max_n <= len(A179043):
        print(f"--max-n must be in 1..{len(A179043)} "
              f"(embedded golden values)", file=sys.stderr)
        return EXIT_USAGE
    failures = 0
    for k in range(1, args.max_n + 1):
        got = count_burnside(MatrixShape(k, k)).value
        expected = A179043[k - 1]
        status = "PASS" if got == expected else "FAIL"
        failures += status == "FAIL"
        print(f"n={k:2d} {status} {got}")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH_OR_IO


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    handler = {
        "count": cmd_count,
        "enumerate": cmd_enumerate,
        "check": cmd_check,
        "oeis": cmd_oeis,
    }[args.command]
    try:
        return handler(args)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}\n"
              f"hint: `--method burnside` counts any shape analytically",
              file=sys.stderr)
        return EXIT_CAPACITY
    except BrokenPipeError:
        return EXIT_MISMATCH_OR_IO
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH_OR_IO


if __name__ == "__main__":
    sys.exit(main())

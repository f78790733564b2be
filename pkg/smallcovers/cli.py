"""The command line front end."""
import argparse
import csv
import pathlib
import sys
import typing


from pydantic import ValidationError


from smallcovers.errors import CapExceededError, DimensionError, SmallCoversException
from smallcovers.runner import Runner
from smallcovers.schema.polytopes import Cube, SimplexProduct
from smallcovers.schema.records import CheckResult, CountRecord, VerificationReport
from smallcovers.util import VERSION
from smallcovers.util.json import to_cell
from smallcovers.util.logging import LoggingClass, configure


FORMATS = ("json", "csv", "table")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

Output = typing.Union[typing.List[CountRecord], VerificationReport]


def _non_negative(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from None

    if number < 0:
        raise argparse.ArgumentTypeError(f"{value!r} must be at least 0")

    return number


def _positive(value: str) -> int:
    number = _non_negative(value)
    if not number:
        raise argparse.ArgumentTypeError(f"{value!r} must be at least 1")

    return number


def _dims(value: str) -> typing.Tuple[int, ...]:
    return tuple(_positive(part.strip()) for part in value.split(","))


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    #  Sub-commands accept the global flags too, without overriding ones given before the command.
    def default(value: typing.Any) -> typing.Any:
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=FORMATS, default=default("json"), help="Output format (default: json).")
    parser.add_argument("--jobs", type=_positive, default=default(1), help="Worker processes (default: 1).")
    parser.add_argument(
        "--allow-long-runs",
        action="store_true",
        default=default(False),
        help="Raise enumeration and brute force caps to their long-run values.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=default(0), help="Log progress to stderr (repeat for debug)."
    )


def _count_dj(runner: Runner, args: argparse.Namespace) -> Output:
    if args.cube is not None:
        return runner.count_dj(Cube(dimension=args.cube))

    return runner.count_dj(SimplexProduct(dims=args.simplices))


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser.

    Returns:
        `argparse.ArgumentParser`: Each leaf command sets a `handler(runner, args)` default.
    """
    parser = argparse.ArgumentParser(
        prog="smallcovers", description="Exact counts of small covers over cubes and products of simplices."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    _add_global_flags(parser, suppress=False)
    flags = argparse.ArgumentParser(add_help=False)
    _add_global_flags(flags, suppress=True)
    counted = argparse.ArgumentParser(add_help=False, parents=[flags])
    counted.add_argument(
        "--verify", action="store_true", help="Also report the stored table or an independent brute force value."
    )

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    count = commands.add_parser("count", help="Count a quantity.").add_subparsers(dest="quantity", metavar="QUANTITY")
    count.required = True
    dj = count.add_parser("dj", parents=[counted], help="D-J classes over a cube or a product of simplices.")
    polytope = dj.add_mutually_exclusive_group(required=True)
    polytope.add_argument("--cube", type=_non_negative, metavar="N")
    polytope.add_argument("--simplices", type=_dims, metavar="N1,N2,...")
    dj.set_defaults(handler=_count_dj)

    equivariant = count.add_parser("equivariant", parents=[counted], help="Equivariant classes over the n-cube.")
    equivariant.add_argument("n", type=_non_negative)
    equivariant.add_argument("--bruteforce", action="store_true", help="Count orbits of the brute forced cf(I^n).")
    equivariant.set_defaults(handler=lambda runner, args: runner.count_equivariant(args.n, args.bruteforce))

    unlabeled = count.add_parser(
        "unlabeled-bound", parents=[counted], help="Unlabeled DAGs, an upper bound for weakly equivariant classes."
    )
    unlabeled.add_argument("n", type=_non_negative)
    unlabeled.add_argument("--compute", action="store_true", help="Count canonical forms instead of the table.")
    unlabeled.set_defaults(handler=lambda runner, args: runner.count_unlabeled_bound(args.n, args.compute))

    gl = count.add_parser("gl", parents=[counted], help="The order of GL(n, Z_2).")
    gl.add_argument("n", type=_non_negative)
    gl.set_defaults(handler=lambda runner, args: runner.count_gl(args.n))

    fixed = count.add_parser("fixed", parents=[counted], help="Matrices fixed by a product of k reflections.")
    fixed.add_argument("n", type=_non_negative)
    fixed.add_argument("k", type=_non_negative)
    fixed.add_argument("--bruteforce", action="store_true", help="Count by brute force over cf(I^n).")
    fixed.set_defaults(handler=lambda runner, args: runner.count_fixed(args.n, args.k, args.bruteforce))

    enumerate_ = commands.add_parser("enumerate", help="Enumerate and optionally dump a set.")
    enumerate_ = enumerate_.add_subparsers(dest="kind", metavar="KIND")
    enumerate_.required = True
    mn = enumerate_.add_parser("mn", parents=[flags], help="Matrices with every principal minor 1.")
    mn.add_argument("n", type=_positive)
    mn.add_argument("--out", type=pathlib.Path, metavar="PATH", help="Dump one matrix per line here.")
    mn.set_defaults(handler=lambda runner, args: runner.enumerate_mn(args.n, args.out))

    dag = enumerate_.add_parser("dags", parents=[flags], help="Labeled acyclic digraphs.")
    dag.add_argument("n", type=_non_negative)
    dag.add_argument("--out", type=pathlib.Path, metavar="PATH", help="Dump one digraph per line here.")
    dag.set_defaults(handler=lambda runner, args: runner.enumerate_dags(args.n, args.out))

    verify = commands.add_parser("verify", help="Cross-check formulas against exhaustive oracles.")
    verify = verify.add_subparsers(dest="verification", metavar="VERIFICATION")
    verify.required = True
    bijection = verify.add_parser("bijection", parents=[flags], help="DAGs on n nodes against M(n).")
    bijection.add_argument("n", type=_positive)
    bijection.set_defaults(handler=lambda runner, args: runner.verify_bijection(args.n))

    burnside = verify.add_parser("burnside", parents=[flags], help="Equivariant classes by brute force.")
    burnside.add_argument("n", type=_non_negative)
    burnside.set_defaults(handler=lambda runner, args: runner.verify_burnside(args.n))

    product = verify.add_parser("product", parents=[flags], help="D-J classes over a product of simplices.")
    product.add_argument("dims", type=_dims, metavar="N1,N2,...")
    product.set_defaults(handler=lambda runner, args: runner.verify_product(SimplexProduct(dims=args.dims)))

    tables = verify.add_parser("tables", parents=[flags], help="The stored tables against their formulas.")
    tables.set_defaults(handler=lambda runner, args: runner.verify_tables())
    return parser


def _rows(output: Output) -> typing.Tuple[typing.List[str], typing.List[typing.List[str]]]:
    if isinstance(output, VerificationReport):
        fields = list(CheckResult.__fields__)
        header = ["verification", "polytope", *fields, "runtime_ms"]
        rows = [
            [output.verification, output.polytope, *(to_cell(getattr(check, field)) for field in fields)]
            + [to_cell(output.runtime_ms)]
            for check in output.checks
        ]
        return header, rows

    header = list(CountRecord.__fields__)
    return header, [[to_cell(getattr(record, field)) for field in header] for record in output]


def write_output(output: Output, output_format: str, stream: typing.TextIO) -> None:
    """
    Write records or a report in one of the supported formats.

    Args:
        output (list or smallcovers.schema.records.VerificationReport): What to write.
        output_format (str): One of `json` (one object per line), `csv` (header then rows in field order)
            or `table` (aligned text).
        stream (file): The text stream written to.
    """
    if output_format == "json":
        for item in [output] if isinstance(output, VerificationReport) else output:
            stream.write(item.json() + "\n")

        return

    header, rows = _rows(output)
    if output_format == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return

    widths = [max(len(cell) for cell in column) for column in zip(header, *rows)]
    for row in [header, *rows]:
        stream.write("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() + "\n")

    if isinstance(output, VerificationReport):
        stream.write(f"{'PASS' if output.passed else 'FAIL'}\n")


class _Diagnostics(LoggingClass):
    #  Owns the stderr side of a run.

    def __init__(self, stream: typing.TextIO) -> None:
        self.stream = stream

    def error(self, exc: BaseException) -> None:
        self.log.debug("Command failed", exc_info=exc)
        self.stream.write(f"smallcovers: error: {exc}\n")


def run(
    argv: typing.Optional[typing.Sequence[str]] = None,
    stdout: typing.Optional[typing.TextIO] = None,
    stderr: typing.Optional[typing.TextIO] = None,
) -> int:
    """
    Parse arguments, run one command and write its output.

    Args:
        argv (sequence, optional): The arguments, defaults to `sys.argv[1:]`.
        stdout (file, optional): Where records are written, defaults to `sys.stdout`.
        stderr (file, optional): Where diagnostics and logs are written, defaults to `sys.stderr`.

    Returns:
        int: 0 on success, 1 on a failed verification or internal error, 2 on a usage error and 3 when a cap
            is exceeded.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    configure(args.verbose, stderr)
    diagnostics = _Diagnostics(stderr)
    try:
        with Runner(args.jobs, args.allow_long_runs, getattr(args, "verify", False)) as runner:
            output = args.handler(runner, args)
    except CapExceededError as exc:
        diagnostics.error(exc)
        return EXIT_CAP
    except (DimensionError, ValidationError) as exc:
        diagnostics.error(exc)
        return EXIT_USAGE
    except SmallCoversException as exc:
        diagnostics.error(exc)
        return EXIT_FAILED

    write_output(output, args.format, stdout)
    if isinstance(output, VerificationReport):
        return EXIT_OK if output.passed else EXIT_FAILED

    if len({record.value for record in output}) > 1:
        diagnostics.stream.write(
            "smallcovers: error: values disagree: "
            + ", ".join(f"{record.method.value}={record.value}" for record in output)
            + "\n"
        )
        return EXIT_FAILED

    return EXIT_OK


def main() -> None:
    """The console script entry point."""
    raise SystemExit(run())


__all__ = ["FORMATS", "build_parser", "write_output", "run", "main"]

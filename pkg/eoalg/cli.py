"""
Command-line entry point for eoalg.

Parses the global flags, configures logging, discovers the verbs and
dispatches to one of them. Reports go to stdout, logs and errors to stderr.
"""

import argparse
import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from . import __version__
from .commands import registry
from .commands.base import EXIT_USAGE, CommandContext
from .config import DEFAULT_LIMITS, ResourceLimits
from .logging_config import get_logger, setup_logging

logger = get_logger("cli")


@dataclass(frozen=True)
class DispatchOutcome:
    """Exit code plus whatever was captured on stdout and stderr."""
    exit_code: int
    stdout: str = ""
    stderr: str = ""


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """The top-level parser with one subparser per registered verb."""
    if not registry.get_all_commands():
        registry.auto_discover_commands()

    parser = argparse.ArgumentParser(
        prog="eoalg",
        allow_abbrev=False,
        description="Quotients of BP^((G))<m>, K_0 relations and Moore-spectrum gates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=["table", "json"], default="table",
                        help="report format (default: table)")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        type=str.upper, help="log level for stderr (default: WARNING)")
    parser.add_argument("--log-format", choices=["text", "json"], default="text")

    limits = parser.add_argument_group("resource limits")
    limits.add_argument("--max-degree", type=_positive_int,
                        help=f"largest Groebner basis degree (default {DEFAULT_LIMITS.max_degree})")
    limits.add_argument("--max-basis-size", type=_positive_int,
                        help=f"largest Groebner basis (default {DEFAULT_LIMITS.max_basis_size})")
    limits.add_argument("--max-reductions", type=_positive_int,
                        help=f"S-pair reductions per run (default {DEFAULT_LIMITS.max_reductions})")
    limits.add_argument("--max-series-degree", type=_positive_int,
                        help="largest dense Poincare series "
                             f"(default {DEFAULT_LIMITS.max_series_degree})")
    limits.add_argument("--max-group-exponent", type=_positive_int,
                        help="largest n whose markings of C_{2^n} are enumerated "
                             f"(default {DEFAULT_LIMITS.max_group_exponent})")
    limits.add_argument("--workers", type=_positive_int,
                        help="threads reducing S-pairs (default 1)")

    subparsers = parser.add_subparsers(dest="verb", metavar="VERB", required=True)
    registry.register_with_parser(subparsers)
    return parser


def limits_from_args(args: argparse.Namespace) -> ResourceLimits:
    return DEFAULT_LIMITS.with_overrides(
        max_degree=args.max_degree,
        max_basis_size=args.max_basis_size,
        max_reductions=args.max_reductions,
        max_series_degree=args.max_series_degree,
        max_group_exponent=args.max_group_exponent,
        workers=args.workers,
    )


def dispatch(argv: Sequence[str], stdout: Optional[TextIO] = None,
             stderr: Optional[TextIO] = None) -> DispatchOutcome:
    """
    Run one invocation.

    Args:
        argv: Arguments without the program name.
        stdout: Report stream; captured into the outcome when None.
        stderr: Error and log stream; captured into the outcome when None.

    Returns:
        The exit code and the captured output.
    """
    out = stdout if stdout is not None else io.StringIO()
    err = stderr if stderr is not None else io.StringIO()

    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as exit_request:
        code = exit_request.code if isinstance(exit_request.code, int) else EXIT_USAGE
        return _outcome(code, out, err, stdout, stderr)

    setup_logging(args.log_level, args.log_format, stream=err)
    command = registry.get_command(args.verb)
    verb_parser = registry.get_parser(args.verb)
    ctx = CommandContext(
        limits=limits_from_args(args),
        output_format=args.format,
        stdout=out,
        stderr=err,
        usage=verb_parser.format_usage() if verb_parser else "",
    )
    code = command.execute_with_error_handling(ctx, args)
    logger.info("%s finished with exit code %d", args.verb, code)
    return _outcome(code, out, err, stdout, stderr)


def _outcome(code: int, out, err, stdout, stderr) -> DispatchOutcome:
    return DispatchOutcome(
        exit_code=code,
        stdout=out.getvalue() if stdout is None else "",
        stderr=err.getvalue() if stderr is None else "",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point."""
    arguments = sys.argv[1:] if argv is None else argv
    return dispatch(arguments, stdout=sys.stdout, stderr=sys.stderr).exit_code

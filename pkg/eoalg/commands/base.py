"""
Base command class and common utilities for eoalg CLI verbs.
"""

import argparse
import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, TextIO

from ..config import DEFAULT_LIMITS, ResourceLimits
from ..errors import EoalgError, InvalidInput, ResourceLimitExceeded
from ..logging_config import get_logger
from ..utils.group_names import parse_group
from ..utils.report_utils import render_json

logger = get_logger("commands")

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCE_LIMIT = 3


@dataclass
class CommandContext:
    """What a command needs from the process: limits, output format and streams."""
    limits: ResourceLimits = DEFAULT_LIMITS
    output_format: str = "table"
    stdout: TextIO = field(default_factory=lambda: sys.stdout)
    stderr: TextIO = field(default_factory=lambda: sys.stderr)
    usage: str = ""

    @property
    def wants_json(self) -> bool:
        return self.output_format == "json"

    def send(self, text: str) -> None:
        """Write a block of report text to stdout."""
        print(text, file=self.stdout)

    def report(self, verb: str, result: Mapping[str, Any], text: str) -> None:
        """Send the JSON envelope or the human-readable text, per the output format."""
        self.send(render_json(verb, result) if self.wants_json else text)

    def error(self, text: str) -> None:
        print(text, file=self.stderr)


class BaseCommand(ABC):
    """
    Abstract base class for all eoalg CLI verbs.

    Provides argument registration, error handling and exit-code mapping.
    """

    def __init__(self):
        """Initialize the command with its name and description."""
        self._name = self.get_command_name()
        self._description = self.get_command_description()

    @property
    def name(self) -> str:
        """Get the verb name."""
        return self._name

    @property
    def description(self) -> str:
        """Get the verb description."""
        return self._description

    @abstractmethod
    def get_command_name(self) -> str:
        """Return the verb (e.g., 'dim', 'moore')."""
        pass

    @abstractmethod
    def get_command_description(self) -> str:
        """Return a one-line description for the verb's help."""
        pass

    def configure_parser(self, parser: argparse.ArgumentParser) -> None:
        """Add the verb's arguments to its subparser. No arguments by default."""

    @abstractmethod
    def execute(self, ctx: CommandContext, args: argparse.Namespace) -> int:
        """
        Execute the verb.

        Args:
            ctx: Limits, output format and streams.
            args: Parsed arguments of the verb.

        Returns:
            The exit code: 0, or 1 for a negative mathematical verdict.
        """
        pass

    def handle_error(self, ctx: CommandContext, error: Exception) -> int:
        """
        Report an error on stderr and map it to an exit code.

        Args:
            ctx: Command context
            error: The exception that occurred

        Returns:
            2 for invalid input and internal errors, 3 for resource limits.
        """
        if isinstance(error, ResourceLimitExceeded):
            logger.warning("%s stopped: %s", self._name, error)
            ctx.error(f"error: {self._name}: {error}")
            return EXIT_RESOURCE_LIMIT
        if isinstance(error, InvalidInput):
            logger.info("%s rejected its input: %s", self._name, error)
            ctx.error(f"error: {self._name}: {error}")
            if ctx.usage:
                ctx.error(ctx.usage.rstrip())
            return EXIT_USAGE
        logger.error("error in %s: %s", self._name, error, exc_info=True)
        ctx.error(f"error: {self._name}: {error}")
        return EXIT_USAGE

    def execute_with_error_handling(self, ctx: CommandContext, args: argparse.Namespace) -> int:
        """
        Execute the verb and turn eoalg errors into exit codes.

        Args:
            ctx: Command context
            args: Parsed arguments of the verb
        """
        logger.info("dispatching %s", self._name)
        try:
            return self.execute(ctx, args)
        except EoalgError as error:
            return self.handle_error(ctx, error)


def add_group_argument(parser: argparse.ArgumentParser, required: bool = True,
                       help_text: str = "cyclic 2-group: C2, C4, C8, ...") -> None:
    parser.add_argument("--group", required=required, help=help_text)


def add_truncation_argument(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--m", type=int, required=required, help="truncation level m >= 0")


def group_exponent(args: argparse.Namespace) -> Optional[int]:
    """The exponent n of --group, or None when the flag was not given."""
    if getattr(args, "group", None) is None:
        return None
    return parse_group(args.group)


def require_non_negative(value: int, flag: str) -> int:
    if value < 0:
        raise InvalidInput(f"{flag} must be non-negative, got {value}")
    return value

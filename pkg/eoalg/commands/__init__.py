"""
Command system for the eoalg CLI.

One module per verb, each defining a BaseCommand subclass that the registry
discovers and attaches to the argument parser.
"""

from .base import BaseCommand, CommandContext
from .registry import CommandRegistry

# Import command classes to ensure they're available for auto-discovery
from .help_command import HelpCommand
from .dim_command import DimCommand
from .series_command import SeriesCommand
from .binom_command import BinomCommand
from .orbits_command import OrbitsCommand
from .filtration_command import FiltrationCommand
from .k0_command import K0Command
from .moore_command import MooreCommand
from .nilpotence_command import NilpotenceCommand
from .regularity_command import RegularityCommand
from .steenrod_command import SteenrodCommand

# Global command registry instance
registry = CommandRegistry()

__all__ = [
    'BaseCommand',
    'CommandContext',
    'CommandRegistry',
    'registry',
    'HelpCommand',
    'DimCommand',
    'SeriesCommand',
    'BinomCommand',
    'OrbitsCommand',
    'FiltrationCommand',
    'K0Command',
    'MooreCommand',
    'NilpotenceCommand',
    'RegularityCommand',
    'SteenrodCommand',
]

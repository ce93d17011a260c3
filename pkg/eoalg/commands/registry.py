"""
Command registry system for automatic verb discovery and registration.
"""

import argparse
import importlib
import inspect
import pkgutil
from typing import Dict, Optional, Type

from ..logging_config import get_logger
from .base import BaseCommand

logger = get_logger("registry")


class CommandRegistry:
    """
    Registry for managing and auto-discovering CLI verbs.

    Discovers command classes in the commands package and attaches them to
    an argparse subparser set.
    """

    def __init__(self):
        self._commands: Dict[str, BaseCommand] = {}
        self._parsers: Dict[str, argparse.ArgumentParser] = {}

    def register_command(self, command_class: Type[BaseCommand]) -> None:
        """
        Register a command class with the registry.

        Args:
            command_class: The command class to register
        """
        command_instance = command_class()
        self._commands[command_instance.name] = command_instance
        logger.debug("registered command: %s", command_instance.name)

    def get_command(self, name: str) -> Optional[BaseCommand]:
        """Get a command instance by name."""
        return self._commands.get(name)

    def get_parser(self, name: str) -> Optional[argparse.ArgumentParser]:
        """Get the subparser built for a command."""
        return self._parsers.get(name)

    def get_all_commands(self) -> Dict[str, BaseCommand]:
        """Get all registered commands."""
        return self._commands.copy()

    def auto_discover_commands(self, package_name: str = "eoalg.commands") -> None:
        """
        Automatically discover and register commands from the commands package.

        Args:
            package_name: The package to search for command modules
        """
        try:
            package = importlib.import_module(package_name)
        except ImportError as e:
            logger.error("failed to import commands package %s: %s", package_name, e)
            return

        for _, modname, _ in pkgutil.iter_modules(package.__path__):
            if modname in ['__init__', 'base', 'registry']:
                continue

            module_name = f"{package_name}.{modname}"
            try:
                module = importlib.import_module(module_name)
            except ImportError as e:
                logger.error("failed to import command module %s: %s", module_name, e)
                continue

            for attr_name in dir(module):
                attr = getattr(module, attr_name)
                if (isinstance(attr, type)
                        and issubclass(attr, BaseCommand)
                        and attr is not BaseCommand
                        and not inspect.isabstract(attr)
                        and attr.__module__ == module_name):
                    self.register_command(attr)

    def register_with_parser(self, subparsers) -> None:
        """
        Add one subparser per registered command, in alphabetical order.

        Args:
            subparsers: The object returned by ArgumentParser.add_subparsers()
        """
        for name in sorted(self._commands):
            command = self._commands[name]
            parser = subparsers.add_parser(name, help=command.description,
                                           description=command.description,
                                           allow_abbrev=False)
            command.configure_parser(parser)
            parser.set_defaults(verb=name)
            self._parsers[name] = parser

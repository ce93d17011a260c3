#!/usr/bin/env python3
"""
eoalg - algebra of quotients of BP^((G))<m> for cyclic 2-groups G.

This is the main entry point for the command-line tool.
"""
import sys

from eoalg.cli import main as run_cli


def main():
    """Entry point for the CLI."""
    return run_cli()


if __name__ == "__main__":
    sys.exit(main())

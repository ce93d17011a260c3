"""
Help command for the eoalg CLI.

Lists the available verbs and a few example invocations.
"""

from ..utils.report_utils import render_table
from .base import EXIT_OK, BaseCommand

EXAMPLES = """
Examples:

  eoalg dim --group C4 --m 2
  eoalg series --group C8 --m 1 --factored
  eoalg filtration --group C8 --kdeg 1
  eoalg k0 --group C4 --kdeg 1 --trace
  eoalg k0 --group C8 --height-drop --m 1
  eoalg moore --exponents 1,1
  eoalg nilpotence --bundled c2_m3
  eoalg regularity --bundled c4_m2 --group C4 --m 2
  eoalg --format json steenrod --m 2

Exit codes: 0 success, 1 negative verdict (ruled out, not nilpotent, not
regular), 2 usage error, 3 resource limit.
"""


class HelpCommand(BaseCommand):
    """Command to display help information about the CLI."""

    def get_command_name(self) -> str:
        return "help"

    def get_command_description(self) -> str:
        return "List the available verbs"

    def execute(self, ctx, args) -> int:
        """
        Display the verbs known to the registry and usage examples.

        Args:
            ctx: Command context
            args: Unused
        """
        from . import registry

        commands = registry.get_all_commands()
        rows = [[name, commands[name].description] for name in sorted(commands)]
        result = {"verbs": {name: description for name, description in rows}}
        text = "eoalg: equivariant quotients, K_0 relations and Moore-spectrum gates\n\n"
        text += render_table(["verb", "description"], rows) + "\n" + EXAMPLES.rstrip()
        ctx.report(self.name, result, text)
        return EXIT_OK

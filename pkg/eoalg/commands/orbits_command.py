"""
orbits: the G-orbits of C2-equivariant markings G -> {0, 1}.
"""

from ..errors import GroupError
from ..services.cyclic2 import CyclicGroup, burnside_orbit_count, orbit_decompose
from ..utils.group_names import group_name
from ..utils.report_utils import render_table
from .base import EXIT_OK, BaseCommand, add_group_argument, group_exponent


class OrbitsCommand(BaseCommand):
    """List marking orbits with their stabilizers, gradings and n_f."""

    def get_command_name(self) -> str:
        return "orbits"

    def get_command_description(self) -> str:
        return "Orbits of C2-equivariant markings of a cyclic 2-group"

    def configure_parser(self, parser) -> None:
        add_group_argument(parser)

    def execute(self, ctx, args) -> int:
        n = group_exponent(args)
        if n < 1:
            raise GroupError("markings need C2 inside G; use C2, C4, C8, ...")
        group = CyclicGroup(n)
        orbits = orbit_decompose(group, ctx.limits)
        rows = [
            {
                "marking": str(orbit.representative),
                "grading": orbit.grading,
                "stabilizer": group_name(orbit.stabilizer_exponent),
                "orbit_size": orbit.orbit_size,
                "n_f": orbit.n_f,
            }
            for orbit in orbits
        ]
        result = {
            "group": group_name(n),
            "orbit_count": len(orbits),
            "burnside_count": burnside_orbit_count(group),
            "orbits": rows,
        }
        table = render_table(
            ["marking", "grading", "stabilizer", "orbit size", "n_f"],
            [[row["marking"], row["grading"], row["stabilizer"], row["orbit_size"], row["n_f"]]
             for row in rows],
        )
        text = f"{len(orbits)} orbits of markings of {group_name(n)}\n{table}"
        ctx.report(self.name, result, text)
        return EXIT_OK

"""
filtration: layers of the associated graded of the Koszul filtration.
"""

from ..services.koszul import associated_graded, layer_rows, normalize_layers
from ..utils.group_names import group_name
from ..utils.report_utils import render_table
from .base import EXIT_OK, BaseCommand, add_group_argument, group_exponent


class FiltrationCommand(BaseCommand):
    """One row per grading, the summands of that layer joined by (+)."""

    def get_command_name(self) -> str:
        return "filtration"

    def get_command_description(self) -> str:
        return "Associated graded of the Koszul filtration of M over S[G.x]"

    def configure_parser(self, parser) -> None:
        add_group_argument(parser)
        parser.add_argument("--kdeg", type=int, required=True,
                            help="|x| = kdeg * rho_2")
        parser.add_argument("--base", default="x", help="name of the filtered class")
        parser.add_argument("--module", default="M", help="name of the module")
        parser.add_argument("--raw", action="store_true",
                            help="keep conjugates as enumerated instead of the normal form")

    def execute(self, ctx, args) -> int:
        n = group_exponent(args)
        table = associated_graded(n, args.kdeg, args.base, args.module, limits=ctx.limits)
        if not args.raw:
            table = normalize_layers(table)
        layers = [
            {"grading": grading, "summands": layer_rows({grading: table[grading]})}
            for grading in sorted(table)
        ]
        result = {"group": group_name(n), "kdeg": args.kdeg, "layers": layers}
        rows = [[layer["grading"], " (+) ".join(row["summand"] for row in layer["summands"])]
                for layer in layers]
        ctx.report(self.name, result, render_table(["grading", "gr"], rows))
        return EXIT_OK

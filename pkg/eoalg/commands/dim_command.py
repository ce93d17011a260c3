"""
dim: the F2-dimension of pi^e_* BP^((G))<m> / (2, v_1, ..., v_h).
"""

from ..services.hilbert import HeightContext, dimension_report
from ..utils.group_names import group_name
from ..utils.report_utils import render_pairs, yes_no
from .base import (
    EXIT_OK,
    BaseCommand,
    add_group_argument,
    add_truncation_argument,
    group_exponent,
)


class DimCommand(BaseCommand):
    """Dimension of the quotient, with the Gaussian-product cross-check."""

    def get_command_name(self) -> str:
        return "dim"

    def get_command_description(self) -> str:
        return "Dimension of the quotient by (2, v_1, ..., v_h)"

    def configure_parser(self, parser) -> None:
        add_group_argument(parser)
        add_truncation_argument(parser)

    def execute(self, ctx, args) -> int:
        report = dimension_report(HeightContext(group_exponent(args), args.m), ctx.limits)
        text = "\n".join([
            f"dim({group_name(report['group_n'])}, m={report['m']}) = {report['dimension']}",
            render_pairs([
                ("height h", report["h"]),
                ("gaussian product", report["gaussian_product"]),
                ("odd", yes_no(report["odd"])),
            ]),
        ])
        ctx.report(self.name, report, text)
        return EXIT_OK

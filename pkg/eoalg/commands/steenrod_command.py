"""
steenrod: conjugate Milnor generators and the C4 mod-2 presentation.
"""

from ..services.groebner import staircase_series
from ..services.hilbert import HeightContext, dimension
from ..services.steenrod import PRESENTATION_NOTE, c4_mod2_presentation, steenrod_conjugates
from ..utils.report_utils import render_pairs, wrap_terms, yes_no
from .base import EXIT_OK, BaseCommand, add_truncation_argument


class SteenrodCommand(BaseCommand):
    """Print zeta_1..zeta_2m and compare the presentation with the Poincare series."""

    def get_command_name(self) -> str:
        return "steenrod"

    def get_command_description(self) -> str:
        return "Conjugates zeta_k and the quotient F2[xi_1..xi_m]/(zeta_{m+1}..zeta_{2m})"

    def configure_parser(self, parser) -> None:
        add_truncation_argument(parser)

    def execute(self, ctx, args) -> int:
        zetas = steenrod_conjugates(args.m)
        ideal = c4_mod2_presentation(args.m)
        series = staircase_series(ideal, ctx.limits)
        staircase = series.value_at_one()
        expected = dimension(HeightContext(2, args.m), ctx.limits)
        result = {
            "m": args.m,
            "conjugates": {f"zeta{k}": str(zeta) for k, zeta in enumerate(zetas, start=1)},
            "quotient_dimension": staircase,
            "series": list(series.coefficients),
            "dimension_from_series": expected,
            "agrees": staircase == expected,
            "note": PRESENTATION_NOTE,
        }
        lines = []
        for k, zeta in enumerate(zetas, start=1):
            lines.extend(wrap_terms(f"zeta{k} = {zeta}"))
        lines.append(render_pairs([
            ("staircase dimension", staircase),
            ("dimension from series", expected),
            ("agree", yes_no(staircase == expected)),
        ]))
        ctx.report(self.name, result, "\n".join(lines))
        return EXIT_OK

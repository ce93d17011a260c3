"""
series: the Poincare series of the quotient, dense or in cyclotomic factored form.
"""

from ..services.hilbert import HeightContext, series_report
from ..utils.group_names import group_name
from ..utils.report_utils import render_pairs, wrap_terms
from .base import (
    EXIT_OK,
    BaseCommand,
    add_group_argument,
    add_truncation_argument,
    group_exponent,
)


def _factored_text(multiplicities: dict) -> str:
    factors = []
    for d, exponent in sorted(multiplicities.items(), key=lambda item: int(item[0])):
        factors.append(f"Phi_{d}" if exponent == 1 else f"Phi_{d}^{exponent}")
    return " * ".join(factors) or "1"


class SeriesCommand(BaseCommand):
    """Poincare series f_m(x) with its degree and value at 1."""

    def get_command_name(self) -> str:
        return "series"

    def get_command_description(self) -> str:
        return "Poincare series of the quotient by (2, v_1, ..., v_h)"

    def configure_parser(self, parser) -> None:
        add_group_argument(parser)
        add_truncation_argument(parser)
        parser.add_argument("--factored", action="store_true",
                            help="print the product of cyclotomic polynomials instead")

    def execute(self, ctx, args) -> int:
        report = series_report(HeightContext(group_exponent(args), args.m), ctx.limits,
                               factored=args.factored)
        title = f"f(x) for {group_name(report['group_n'])}, m={report['m']}"
        if report["coefficients"] is None:
            body = [f"f(x) = {_factored_text(report['factored'])}"]
        else:
            body = wrap_terms(f"f(x) = {report['series']}")
        text = "\n".join([title] + body + [render_pairs([
            ("degree", report["degree"]),
            ("f(1)", report["dimension"]),
        ])])
        ctx.report(self.name, report, text)
        return EXIT_OK

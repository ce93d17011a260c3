"""
binom: Gaussian binomial coefficients at q = 2.
"""

from ..services.hilbert import binomial_table
from ..utils.report_utils import render_table
from .base import EXIT_OK, BaseCommand, require_non_negative


class BinomCommand(BaseCommand):

    def get_command_name(self) -> str:
        return "binom"

    def get_command_description(self) -> str:
        return "Gaussian binomial coefficients ((N over M))_2"

    def configure_parser(self, parser) -> None:
        parser.add_argument("N", type=int)
        parser.add_argument("M", type=int, nargs="?",
                            help="omit to list every M from 0 to N")

    def execute(self, ctx, args) -> int:
        require_non_negative(args.N, "N")
        if args.M is not None:
            require_non_negative(args.M, "M")
        rows = binomial_table(args.N, args.M)
        result = {
            "rows": [{"N": n, "M": m, "value": value, "odd": value % 2 == 1}
                     for n, m, value in rows],
        }
        ctx.report(self.name, result, render_table(["N", "M", "value"], rows))
        return EXIT_OK

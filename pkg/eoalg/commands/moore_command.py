"""
moore: the 2-adic gate on generalized Moore spectra S/(2^i0, v_1^i1, ..., v_h^ih).
"""

from ..errors import InvalidInput
from ..services.hilbert import HeightContext
from ..services.moore import MooreShape, euler_report, moore_gate
from ..utils.group_names import parse_exponent_list
from ..utils.report_utils import render_pairs
from .base import (
    EXIT_OK,
    EXIT_VERDICT_FALSE,
    BaseCommand,
    add_group_argument,
    add_truncation_argument,
    group_exponent,
)


class MooreCommand(BaseCommand):
    """Rule a Moore shape out, or say it is not ruled out; exit 1 when ruled out."""

    def get_command_name(self) -> str:
        return "moore"

    def get_command_description(self) -> str:
        return "Check whether a generalized Moore spectrum is ruled out"

    def configure_parser(self, parser) -> None:
        parser.add_argument("--exponents", required=True,
                            help="comma separated i_0,i_1,...,i_h, e.g. 1,1")
        add_group_argument(parser, required=False,
                           help_text="with --m, also print Euler characteristics")
        add_truncation_argument(parser, required=False)

    def execute(self, ctx, args) -> int:
        shape = MooreShape(tuple(parse_exponent_list(args.exponents)))
        verdict = moore_gate(shape)
        result = verdict.to_dict()
        witness = verdict.witness
        pairs = [
            ("status", verdict.status.value),
            ("nu2(i_0 ... i_h)", witness.product_nu2),
            ("nu2(h)", witness.height_nu2),
            ("chi_BP<h> divisible by", witness.bound),
        ]
        if (args.group is None) != (args.m is None):
            raise InvalidInput("--group and --m must be given together")
        if args.group is not None:
            euler = euler_report(HeightContext(group_exponent(args), args.m), shape, ctx.limits)
            result["euler"] = euler
            pairs += [("chi_eo", euler["chi_eo"]), ("chi_BP<h>", euler["chi_bp"])]
        if verdict.caveat:
            pairs.append(("caveat", verdict.caveat))
        ctx.report(self.name, result, f"{shape}\n{render_pairs(pairs)}")
        return EXIT_VERDICT_FALSE if verdict.ruled_out else EXIT_OK

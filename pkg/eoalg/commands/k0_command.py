"""
k0: formal K_0 relations for fixed points of equivariant quotients.

Three modes: the quotient relation of the Koszul filtration (--kdeg), the
height-drop relations 2^k [M^{C_{2^k}}] == [M^e] (--height-drop) and the
fixed points of a suspension by s copies of the regular representation
(--suspend).
"""

from ..errors import InvalidInput
from ..services.koszul import Suspension
from ..services.kzero import (
    K0Atom,
    derive_height_drop,
    euler_balance,
    normalize,
    quotient_relation,
    raw_suspension_sum,
    relation_rows,
    suspend_fixed_points,
)
from ..utils.group_names import group_name
from ..utils.report_utils import wrap_terms
from .base import EXIT_OK, BaseCommand, add_group_argument, group_exponent


def _relation_text(relation, with_trace: bool) -> str:
    lines = wrap_terms(str(relation))
    if with_trace:
        lines += [f"  {index}. {step.rule}" for index, step in enumerate(relation.trace, start=1)]
    return "\n".join(lines)


class K0Command(BaseCommand):
    """Derive K_0 relations and print them with their traces."""

    def get_command_name(self) -> str:
        return "k0"

    def get_command_description(self) -> str:
        return "K_0 relations: quotient relation, height drop, suspension"

    def configure_parser(self, parser) -> None:
        add_group_argument(parser)
        mode = parser.add_mutually_exclusive_group(required=True)
        mode.add_argument("--kdeg", type=int, help="odd k with |x| = k rho_2")
        mode.add_argument("--height-drop", action="store_true",
                          help="derive 2^k [M^{C_{2^k}}] == [M^e] for k = 0..n")
        mode.add_argument("--suspend", type=int, metavar="S",
                          help="fixed points of the suspension by S rho_G")
        parser.add_argument("--m", type=int, help="truncation level naming BP((G))<m>")
        parser.add_argument("--module", default=None, help="name of the module")
        parser.add_argument("--base", default="x", help="name of the filtered class")
        parser.add_argument("--trace", action="store_true", help="print the rule trace")

    def execute(self, ctx, args) -> int:
        n = group_exponent(args)
        if args.kdeg is not None:
            return self._quotient(ctx, args, n)
        if args.height_drop:
            return self._height_drop(ctx, args, n)
        return self._suspension(ctx, args, n)

    def _quotient(self, ctx, args, n: int) -> int:
        relation = quotient_relation(n, args.kdeg, args.base, args.module or "M",
                                     limits=ctx.limits)
        lhs, rhs = euler_balance(relation)
        result = {
            "mode": "quotient",
            "group": group_name(n),
            "kdeg": args.kdeg,
            "relation": relation.to_dict(),
            "euler_balance": [lhs, rhs],
        }
        text = "\n".join([_relation_text(relation, args.trace),
                          f"euler balance: {lhs} = {rhs}"])
        ctx.report(self.name, result, text)
        return EXIT_OK

    def _height_drop(self, ctx, args, n: int) -> int:
        if args.m is not None and args.m < 0:
            raise InvalidInput(f"m must be non-negative, got {args.m}")
        relations = derive_height_drop(n, args.m, args.module, limits=ctx.limits)
        result = {
            "mode": "height_drop",
            "group": group_name(n),
            "m": args.m,
            "relations": relation_rows(relations),
        }
        text = "\n".join(_relation_text(relation, args.trace) for relation in relations)
        ctx.report(self.name, result, text)
        return EXIT_OK

    def _suspension(self, ctx, args, n: int) -> int:
        token = args.module or "X"
        raw = normalize(raw_suspension_sum(n, args.suspend, token, limits=ctx.limits))
        closed = suspend_fixed_points(
            K0Atom(token, n, n, suspension=(Suspension(args.suspend, n),)))
        result = {
            "mode": "suspension",
            "group": group_name(n),
            "multiplier": args.suspend,
            "cell_sum": raw.to_list(),
            "closed_form": closed.to_list(),
            "agrees": raw == closed,
        }
        label = f"[(S^({args.suspend}rho_{group_name(n)}) {token})^{group_name(n)}]"
        text = "\n".join([
            f"{label} = {raw}   (cell sum)",
            f"{label} = {closed}   (closed form)",
            f"agree: {'yes' if raw == closed else 'no'}",
        ])
        ctx.report(self.name, result, text)
        return EXIT_OK

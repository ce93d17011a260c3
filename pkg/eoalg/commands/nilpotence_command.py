"""
nilpotence: nilpotence of t-generators modulo (v_1, ..., v_h) from a relation file.
"""

from ..services.hilbert import HeightContext
from ..services.regularity import nilpotence_report
from ..utils.report_utils import render_table, yes_no
from .base import EXIT_OK, EXIT_VERDICT_FALSE, BaseCommand
from .relation_source import add_relation_arguments, load_relations


class NilpotenceCommand(BaseCommand):

    def get_command_name(self) -> str:
        return "nilpotence"

    def get_command_description(self) -> str:
        return "Decide nilpotence modulo the ideal given by a relation file"

    def configure_parser(self, parser) -> None:
        add_relation_arguments(parser)
        parser.add_argument("--element", action="append", default=None,
                            help="polynomial to test (repeatable); all t-generators by default")

    def execute(self, ctx, args) -> int:
        relations = load_relations(args)
        context = HeightContext(relations.group_n, relations.m)
        report = nilpotence_report(context, relations, args.element, ctx.limits)
        result = report.to_dict()
        result.update({"group_n": relations.group_n, "m": relations.m, "h": context.h})
        rows = [[element, yes_no(flag)] for element, flag in report.nilpotent.items()]
        dimension = result["quotient_dimension"]
        text = "\n".join([render_table(["element", "nilpotent"], rows),
                          f"quotient dimension: {dimension}"])
        ctx.report(self.name, result, text)
        return EXIT_OK if report.all_nilpotent else EXIT_VERDICT_FALSE

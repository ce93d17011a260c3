"""
regularity: whether (v_1, ..., v_h) is a regular sequence, from a relation file.
"""

from ..services.hilbert import HeightContext
from ..services.regularity import verify_regularity
from ..utils.report_utils import render_pairs, yes_no
from .base import (
    EXIT_OK,
    EXIT_VERDICT_FALSE,
    BaseCommand,
    add_group_argument,
    add_truncation_argument,
    group_exponent,
)
from .relation_source import add_relation_arguments, load_relations


class RegularityCommand(BaseCommand):

    def get_command_name(self) -> str:
        return "regularity"

    def get_command_description(self) -> str:
        return "Check that (v_1, ..., v_h) is a regular sequence"

    def configure_parser(self, parser) -> None:
        add_relation_arguments(parser)
        add_group_argument(parser)
        add_truncation_argument(parser)

    def execute(self, ctx, args) -> int:
        relations = load_relations(args)
        report = verify_regularity(HeightContext(group_exponent(args), args.m), relations,
                                   ctx.limits)
        result = report.to_dict()
        text = render_pairs([
            ("regular", yes_no(report.regular)),
            ("sequence length", report.sequence_length),
            ("polynomial generators", report.generator_count),
            ("quotient dimension", result["quotient_dimension"]),
            ("reason", report.reason),
        ])
        ctx.report(self.name, result, text)
        return EXIT_OK if report.regular else EXIT_VERDICT_FALSE

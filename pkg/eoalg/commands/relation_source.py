"""
Shared --relations / --bundled arguments for verbs that read relation files.
"""

from ..services.f2poly import RelationFile
from ..utils.relation_files import BUNDLED, load_bundled, load_relation_file


def add_relation_arguments(parser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--relations", metavar="PATH", help="relation file (JSON)")
    source.add_argument("--bundled", choices=sorted(BUNDLED),
                        help="one of the relation files shipped with eoalg")


def load_relations(args) -> RelationFile:
    if args.relations is not None:
        return load_relation_file(args.relations)
    return load_bundled(args.bundled)

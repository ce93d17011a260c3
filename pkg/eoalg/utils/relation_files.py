"""
Reading and writing relation files.

A relation file is a JSON object:

    {
      "schema_version": 1,
      "group_n": 2,
      "m": 1,
      "generators": [{"name": "t1", "degree": 1}, {"name": "gt1", "degree": 1}],
      "action": [{"source": "t1", "target": "gt1", "sign": 1}, ...],
      "v_images": [{"index": 1, "polynomial": [{"coefficient": 1, "exponents": [1, 0]}, ...]},
                   {"index": 2, "polynomial": null}],
      "extra_relations": [[{"coefficient": 1, "exponents": [2, 1]}]],
      "provenance": ["..."]
    }

A null polynomial marks an image that is not known. Generators missing from
"action" are fixed by gamma.
"""
import json
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..config import RELATION_SCHEMA_VERSION
from ..errors import PolynomialError, RelationFileError
from ..logging_config import get_logger
from ..services.f2poly import GeneratorTable, Polynomial, RelationFile

logger = get_logger("relation_files")

BUNDLED = {
    "c2_m1": "c2_relations_m1.json",
    "c2_m2": "c2_relations_m2.json",
    "c2_m3": "c2_relations_m3.json",
    "c4_m1": "c4_mod2_m1.json",
    "c4_m2": "c4_mod2_m2.json",
    "c4_fragments_m1": "c4_fragments_m1.json",
}


def _require(data: Dict[str, Any], key: str, path: Optional[str]):
    if key not in data:
        raise RelationFileError(f"missing field {key!r}", path)
    return data[key]


def _integer(data: Dict[str, Any], key: str, path: Optional[str]) -> int:
    value = _require(data, key, path)
    if isinstance(value, bool) or not isinstance(value, int):
        raise RelationFileError(f"{key} must be an integer, got {value!r}", path)
    return value


def _list(data: Dict[str, Any], key: str, path: Optional[str], required: bool = False) -> list:
    value = _require(data, key, path) if required else data.get(key, [])
    if not isinstance(value, list):
        raise RelationFileError(f"{key} must be a list, got {value!r}", path)
    return value


def _entries(data: Dict[str, Any], key: str, path: Optional[str],
             required: bool = False) -> List[Dict[str, Any]]:
    entries = _list(data, key, path, required)
    for entry in entries:
        if not isinstance(entry, dict):
            raise RelationFileError(f"{key} entries must be objects, got {entry!r}", path)
    return entries


def _table_from(data: Dict[str, Any], path: Optional[str]) -> GeneratorTable:
    generators = _entries(data, "generators", path, required=True)
    if not generators:
        raise RelationFileError("generators must be a non-empty list", path)
    try:
        names = [str(entry["name"]) for entry in generators]
        degrees = [int(entry["degree"]) for entry in generators]
    except (KeyError, TypeError, ValueError) as error:
        raise RelationFileError(f"malformed generator entry: {error}", path) from error
    action = [(index, 1) for index in range(len(names))]
    for entry in _entries(data, "action", path):
        try:
            source = names.index(entry["source"])
            target = names.index(entry["target"])
            sign = int(entry.get("sign", 1))
        except (KeyError, ValueError, TypeError) as error:
            raise RelationFileError(f"malformed action entry {entry!r}", path) from error
        action[source] = (target, sign)
    try:
        return GeneratorTable(tuple(names), tuple(degrees), tuple(action))
    except PolynomialError as error:
        raise RelationFileError(str(error), path) from error


def relation_file_from_dict(data: Dict[str, Any], path: Optional[str] = None) -> RelationFile:
    """Validate and build a RelationFile.

    Raises:
        RelationFileError: On schema violations or polynomial errors.
    """
    if not isinstance(data, dict):
        raise RelationFileError("a relation file must be a JSON object", path)
    version = _require(data, "schema_version", path)
    if version != RELATION_SCHEMA_VERSION:
        raise RelationFileError(
            f"unsupported schema_version {version}, expected {RELATION_SCHEMA_VERSION}", path)
    group_n = _integer(data, "group_n", path)
    m = _integer(data, "m", path)
    if group_n < 1 or m < 0:
        raise RelationFileError(f"invalid group_n={group_n} or m={m}", path)
    table = _table_from(data, path)
    if not table.is_action_of(group_n):
        raise RelationFileError(
            f"the action has order {table.action_order()}, which does not divide 2^{group_n}", path)

    entries = _entries(data, "v_images", path, required=True)
    indices = [entry.get("index") for entry in entries]
    if (any(isinstance(index, bool) or not isinstance(index, int) for index in indices)
            or sorted(indices) != list(range(1, len(entries) + 1))):
        raise RelationFileError(f"v_images must be indexed 1, 2, ...; found {indices}", path)
    extra_terms = _list(data, "extra_relations", path)
    provenance = data.get("provenance", [])
    if isinstance(provenance, str):
        provenance = [provenance]
    if not isinstance(provenance, list):
        raise RelationFileError(f"provenance must be a list of notes, got {provenance!r}", path)

    images: List[Optional[Polynomial]] = []
    try:
        for entry in sorted(entries, key=lambda entry: entry["index"]):
            terms = entry.get("polynomial")
            images.append(None if terms is None else Polynomial.from_term_list(table, terms))
        extras = tuple(Polynomial.from_term_list(table, terms) for terms in extra_terms)
        return RelationFile(group_n, m, table, tuple(images), extras,
                            tuple(str(note) for note in provenance))
    except PolynomialError as error:
        raise RelationFileError(str(error), path) from error


def relation_file_to_dict(relations: RelationFile) -> Dict[str, Any]:
    table = relations.table
    action = [{"source": table.names[source], "target": table.names[target], "sign": sign}
              for source, (target, sign) in enumerate(table.action)
              if (target, sign) != (source, 1)]
    return {
        "schema_version": RELATION_SCHEMA_VERSION,
        "group_n": relations.group_n,
        "m": relations.m,
        "generators": [{"name": name, "degree": degree}
                       for name, degree in zip(table.names, table.degrees)],
        "action": action,
        "v_images": [{"index": index,
                      "polynomial": None if image is None else image.to_term_list()}
                     for index, image in enumerate(relations.v_images, start=1)],
        "extra_relations": [relation.to_term_list() for relation in relations.extra_relations],
        "provenance": list(relations.provenance),
    }


def load_relation_file(path: Union[str, Path]) -> RelationFile:
    """Load and validate a relation file from disk."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except FileNotFoundError as error:
        raise RelationFileError("file not found", str(path)) from error
    except json.JSONDecodeError as error:
        raise RelationFileError(f"invalid JSON: {error}", str(path)) from error
    logger.debug("loaded relation file %s", path)
    return relation_file_from_dict(data, str(path))


def save_relation_file(relations: RelationFile, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(relation_file_to_dict(relations), handle, indent=2, sort_keys=True)
        handle.write("\n")


def load_bundled(name: str) -> RelationFile:
    """Load one of the relation files shipped in eoalg/data."""
    try:
        filename = BUNDLED[name]
    except KeyError:
        known = ", ".join(sorted(BUNDLED))
        raise RelationFileError(f"no bundled relation file {name!r} (known: {known})") from None
    resource = resources.files("eoalg.data").joinpath(filename)
    with resource.open("r", encoding="utf-8") as handle:
        data = json.load(handle)
    return relation_file_from_dict(data, f"eoalg/data/{filename}")

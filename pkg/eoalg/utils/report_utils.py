"""
Rendering of command results as JSON envelopes or plain-text tables.
"""
import json
from typing import Any, Dict, List, Mapping, Sequence

from ..config import JSON_SCHEMA_VERSION


def envelope(verb: str, result: Mapping[str, Any]) -> Dict[str, Any]:
    """Wrap a result in the versioned report envelope."""
    return {"schema_version": JSON_SCHEMA_VERSION, "verb": verb, "result": dict(result)}


def render_json(verb: str, result: Mapping[str, Any]) -> str:
    """Deterministic JSON: sorted keys, two-space indentation, no NaN or infinity.

    Raises:
        ValueError: If the result holds a float that JSON cannot represent.
    """
    return json.dumps(envelope(verb, result), indent=2, sort_keys=True, allow_nan=False)


def render_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Left-aligned columns separated by two spaces, with a dashed rule under the header.

    Args:
        headers: Column titles.
        rows: One sequence of cells per row; cells are rendered with str().

    Returns:
        The table as a single string without a trailing newline.
    """
    cells = [[str(cell) for cell in row] for row in rows]
    widths = [len(header) for header in headers]
    for row in cells:
        if len(row) != len(headers):
            raise ValueError(f"row {row!r} has {len(row)} cells, expected {len(headers)}")
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]

    def line(values: Sequence[str]) -> str:
        return "  ".join(value.ljust(width) for value, width in zip(values, widths)).rstrip()

    lines = [line(list(headers)), line(["-" * width for width in widths])]
    lines.extend(line(row) for row in cells)
    return "\n".join(lines)


def render_pairs(pairs: Sequence[tuple]) -> str:
    """'key: value' lines with the keys padded to a common width."""
    if not pairs:
        return ""
    width = max(len(str(key)) for key, _ in pairs)
    return "\n".join(f"{str(key).ljust(width)} : {value}" for key, value in pairs)


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def wrap_terms(text: str, max_length: int = 100) -> List[str]:
    """Break a long ' + '-joined expression into lines of at most max_length.

    A single term longer than max_length is kept whole on its own line.
    """
    if len(text) <= max_length:
        return [text]
    lines: List[str] = []
    current = ""
    for index, term in enumerate(text.split(" + ")):
        piece = term if index == 0 else f"+ {term}"
        candidate = f"{current} {piece}" if current else piece
        if len(candidate) > max_length and current:
            lines.append(current)
            current = piece
        else:
            current = candidate
    if current:
        lines.append(current)
    return lines

"""
Parsing and printing of cyclic 2-group names (C2, C4, C8, ...).
"""
import re
from typing import List

from ..errors import GroupError, InvalidInput

_GROUP_PATTERN = re.compile(r'^[Cc](\d+)$')


def is_valid_group_name(name: str) -> bool:
    """Check whether a string names a cyclic 2-group.

    Args:
        name: Candidate such as "C4" or "e".

    Returns:
        True for "e", "C1" and C_{2^n}, False otherwise.
    """
    if not name:
        return False
    if name in ("e", "C1"):
        return True
    match = _GROUP_PATTERN.match(name.strip())
    if not match:
        return False
    order = int(match.group(1))
    return order > 0 and order & (order - 1) == 0


def parse_group(name: str) -> int:
    """Parse a group name to its exponent n (the group has order 2^n).

    Args:
        name: "e", "C1", "C2", "C4", ...

    Returns:
        The exponent n.

    Raises:
        GroupError: If the name is not a cyclic 2-group.
    """
    if not is_valid_group_name(name):
        raise GroupError(f"not a cyclic 2-group: {name!r} (expected e, C2, C4, C8, ...)")
    if name in ("e", "C1"):
        return 0
    order = int(_GROUP_PATTERN.match(name.strip()).group(1))
    return order.bit_length() - 1


def group_name(exponent: int) -> str:
    """Name of C_{2^exponent}; the trivial group prints as "e"."""
    if exponent < 0:
        raise GroupError(f"negative group exponent {exponent}")
    return "e" if exponent == 0 else f"C{1 << exponent}"


def parse_exponent_list(text: str) -> List[int]:
    """Parse a comma separated list of integers such as "1,4,32"."""
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as error:
        raise InvalidInput(f"expected comma separated integers, got {text!r}") from error
    if not values:
        raise InvalidInput("empty exponent list")
    return values

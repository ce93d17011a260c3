"""
Exception hierarchy for eoalg.

Mathematical verdicts (a sequence is not regular, a Moore shape is ruled out)
are returned as values. Exceptions are reserved for invalid input, resource
caps and internal inconsistencies.
"""
from typing import Optional


class EoalgError(Exception):
    """Base class for all eoalg errors."""


class InvalidInput(EoalgError, ValueError):
    """Input that fails validation before any computation starts."""


class GroupError(InvalidInput):
    """Bad group name, group exponent or subgroup exponent."""


class HeightMismatch(InvalidInput):
    """A Moore shape or relation file does not match the height context."""


class PolynomialError(InvalidInput):
    """Polynomial with the wrong arity, table or an unparsable expression."""


class RelationFileError(InvalidInput):
    """A relation file violates its schema or its own invariants."""

    def __init__(self, reason: str, path: Optional[str] = None):
        self.reason = reason
        self.path = path
        where = f"{path}: " if path else ""
        super().__init__(f"{where}{reason}")


class NonExactDivision(EoalgError, ArithmeticError):
    """A division that must be exact left a remainder."""


class ResourceLimitExceeded(EoalgError):
    """A configured computation cap was hit.

    Attributes:
        cap: Name of the cap (e.g. "max_basis_size").
        limit: The configured value.
        observed: The value that exceeded it.
    """

    def __init__(self, cap: str, limit: int, observed: int):
        self.cap = cap
        self.limit = limit
        self.observed = observed
        super().__init__(f"resource limit {cap}={limit} exceeded (observed {observed})")

"""
Computation limits and schema versions.

All configuration is explicit: the CLI builds a ResourceLimits from its
flags and passes it down. Nothing is read from the environment.
"""
from dataclasses import dataclass, replace

# Version of the JSON report envelope printed by the CLI
JSON_SCHEMA_VERSION = 1

# Version of the relation-file format read by utils.relation_files
RELATION_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ResourceLimits:
    """Caps that keep desk-scale computations from running away.

    Attributes:
        max_degree: Largest weighted degree allowed for a basis element.
        max_basis_size: Largest intermediate Groebner basis.
        max_reductions: Largest number of S-pair reductions in one run.
        nilpotence_power_cap: Largest exponent tried by the bounded-power
            nilpotence test before falling back to saturation.
        max_series_degree: Largest degree for which a Poincare series is
            expanded densely.
        max_staircase: Largest box of candidate monomials scanned when
            counting standard monomials.
        max_group_exponent: Largest n for which the 2^(2^(n-1)) markings of
            C_{2^n} are enumerated.
        workers: Threads used to reduce S-pairs of one degree.
    """
    max_degree: int = 512
    max_basis_size: int = 2000
    max_reductions: int = 200_000
    nilpotence_power_cap: int = 64
    max_series_degree: int = 1 << 18
    max_staircase: int = 2_000_000
    max_group_exponent: int = 5
    workers: int = 1

    def with_overrides(self, **overrides) -> "ResourceLimits":
        """Return a copy with the non-None overrides applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)


DEFAULT_LIMITS = ResourceLimits()

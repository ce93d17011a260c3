"""
Associated graded of the Koszul filtration of an S[G.x]-module.

Everything here is symbolic: "M" is an opaque token, suspensions are kept as
(multiplier, subgroup) pairs in regular-representation units, and quotient
variables are recorded as conjugate offsets.

Offsets of a variable orbit acting through C_{2^k} live in G/C_{2^k}, i.e.
residues 0..2^(n-k)-1. At the trivial group the conjugates of the underlying
class x satisfy sigma*x = +-x, so offsets are taken modulo C2 as well.
"""
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..config import DEFAULT_LIMITS, ResourceLimits
from ..errors import GroupError, InvalidInput
from ..logging_config import get_logger
from ..utils.group_names import group_name
from .cyclic2 import CyclicGroup, MarkingOrbit, orbit_decompose

logger = get_logger("koszul")


def offset_modulus(group_exponent: int, acting_exponent: int) -> int:
    """Number of distinct conjugates of a class acting through C_{2^k}."""
    if not 0 <= acting_exponent <= group_exponent:
        raise GroupError(
            f"C_{{2^{acting_exponent}}} is not a subgroup of C_{{2^{group_exponent}}}")
    if group_exponent == 0:
        return 1
    return 1 << (group_exponent - max(acting_exponent, 1))


@dataclass(frozen=True, order=True)
class VariableOrbit:
    """The classes H.g x for g in a set of cosets of H = C_{2^k}.

    Attributes:
        base_name: Name of the filtered class, e.g. "x".
        conjugate_offsets: Sorted distinct residues g identifying the cosets gH.
        acting_subgroup_exponent: k; 0 means the underlying class.
    """
    base_name: str
    conjugate_offsets: Tuple[int, ...]
    acting_subgroup_exponent: int

    def __post_init__(self):
        offsets = tuple(sorted(set(self.conjugate_offsets)))
        if len(offsets) != len(self.conjugate_offsets):
            raise InvalidInput(f"repeated conjugate offsets in {self.conjugate_offsets}")
        object.__setattr__(self, "conjugate_offsets", offsets)

    def names(self) -> List[str]:
        """Printable names of the classes, e.g. ["x", "gx", "g^2x"] or ["C4.x"]."""
        prefix = ""
        if self.acting_subgroup_exponent >= 2:
            prefix = f"{group_name(self.acting_subgroup_exponent)}."
        labels = []
        for offset in self.conjugate_offsets:
            if offset == 0:
                conjugate = ""
            elif offset == 1:
                conjugate = "g"
            else:
                conjugate = f"g^{offset}"
            labels.append(f"{prefix}{conjugate}{self.base_name}")
        return labels

    def to_dict(self) -> dict:
        return {
            "base_name": self.base_name,
            "conjugate_offsets": list(self.conjugate_offsets),
            "acting_subgroup_exponent": self.acting_subgroup_exponent,
        }


@dataclass(frozen=True)
class Suspension:
    """Sigma^{multiplier * rho_H} with H = C_{2^rep_subgroup_exponent}."""
    multiplier: int
    rep_subgroup_exponent: int

    def __str__(self) -> str:
        return f"S^({self.multiplier}rho_{group_name(self.rep_subgroup_exponent)})"


@dataclass(frozen=True)
class QuotientDescriptor:
    """M/(variables) viewed as a C_{2^subgroup_exponent}-spectrum inside C_{2^n}."""
    group_exponent: int
    subgroup_exponent: int
    variables: Tuple[VariableOrbit, ...] = ()
    module_token: str = "M"

    def __post_init__(self):
        CyclicGroup(self.group_exponent).check_subgroup(self.subgroup_exponent)
        for variable in self.variables:
            modulus = offset_modulus(self.group_exponent, variable.acting_subgroup_exponent)
            if any(not 0 <= offset < modulus for offset in variable.conjugate_offsets):
                raise InvalidInput(
                    f"offsets {variable.conjugate_offsets} outside G/H of size {modulus}")

    def __str__(self) -> str:
        return render_quotient(self.module_token, self.variables)


def render_quotient(module_token: str, variables: Sequence[VariableOrbit]) -> str:
    """Render M/(x, gx, C4.x) style text; no variables renders as M."""
    names = [name for variable in variables for name in variable.names()]
    if not names:
        return module_token
    return f"{module_token}/({', '.join(names)})"


def restrict_variables(group_exponent: int, variables: Iterable[VariableOrbit],
                       target_exponent: int) -> Tuple[VariableOrbit, ...]:
    """Re-express each H-orbit H.gx as the K-orbits K.(hg)x for hK in H/K."""
    if not 0 <= target_exponent <= group_exponent:
        raise GroupError(
            f"cannot restrict to C_{{2^{target_exponent}}} inside C_{{2^{group_exponent}}}")
    restricted = []
    for variable in variables:
        source = variable.acting_subgroup_exponent
        if target_exponent > source:
            raise GroupError(
                f"{group_name(target_exponent)} is not contained in the acting "
                f"subgroup {group_name(source)} of {variable.base_name}")
        old_modulus = offset_modulus(group_exponent, source)
        new_modulus = offset_modulus(group_exponent, target_exponent)
        offsets = {
            (offset + step * old_modulus) % new_modulus
            for offset in variable.conjugate_offsets
            for step in range(new_modulus // old_modulus)
        }
        restricted.append(VariableOrbit(variable.base_name, tuple(offsets), target_exponent))
    return tuple(restricted)


def restrict_quotient(desc: QuotientDescriptor, target_exponent: int) -> QuotientDescriptor:
    """Res_K of an equivariant quotient: M/(H.gx | gH) becomes M/(K.hgx | hK in H/K)."""
    if target_exponent > desc.group_exponent:
        raise GroupError(
            f"target exponent {target_exponent} exceeds the group exponent {desc.group_exponent}")
    if target_exponent > desc.subgroup_exponent:
        raise GroupError(
            f"{group_name(target_exponent)} is not contained in {group_name(desc.subgroup_exponent)}")
    variables = restrict_variables(desc.group_exponent, desc.variables, target_exponent)
    return replace(desc, subgroup_exponent=target_exponent, variables=variables)


def merge_variables(variables: Iterable[VariableOrbit]) -> Tuple[VariableOrbit, ...]:
    """Union offsets of orbits sharing base name and acting subgroup; sort."""
    merged: Dict[Tuple[str, int], set] = {}
    for variable in variables:
        key = (variable.base_name, variable.acting_subgroup_exponent)
        merged.setdefault(key, set()).update(variable.conjugate_offsets)
    return tuple(sorted(
        VariableOrbit(name, tuple(offsets), exponent)
        for (name, exponent), offsets in merged.items()
    ))


def conjugation_normal_form(group_exponent: int,
                            variables: Iterable[VariableOrbit]) -> Tuple[VariableOrbit, ...]:
    """Smallest simultaneous translate of all offsets.

    Translating every conjugate by the same g is an equivalence of the
    quotient, so quotients are compared modulo this action.
    """
    variables = merge_variables(variables)
    if not variables:
        return ()
    largest = max(offset_modulus(group_exponent, v.acting_subgroup_exponent) for v in variables)
    best = None
    for shift in range(largest):
        candidate = tuple(
            VariableOrbit(
                v.base_name,
                tuple((offset + shift) % offset_modulus(group_exponent, v.acting_subgroup_exponent)
                      for offset in v.conjugate_offsets),
                v.acting_subgroup_exponent,
            )
            for v in variables
        )
        key = tuple((v.base_name, v.acting_subgroup_exponent, v.conjugate_offsets)
                    for v in candidate)
        if best is None or key < best[0]:
            best = (key, candidate)
    return best[1]


@dataclass(frozen=True)
class LayerSummand:
    """Ind_{H_f}^G Sigma^{n_f k rho_{H_f}} M/(H_f.gx | gH_f in f^{-1}(0)/H_f).

    Attributes:
        grading: (1/2)|f^{-1}(1)|.
        induced_from_exponent: k with H_f = C_{2^k}.
        suspension: None for the grading-0 summand.
        quotient_vars: The variables coned off.
        n_f: |f^{-1}(1)/H_f|.
        marking: Canonical representative of f, as a bit string.
        group_exponent: n.
        module_token: Name of the module, "M" by default.
    """
    grading: int
    induced_from_exponent: int
    suspension: Optional[Suspension]
    quotient_vars: Tuple[VariableOrbit, ...]
    n_f: int
    marking: str
    group_exponent: int
    module_token: str = "M"

    def quotient(self) -> QuotientDescriptor:
        return QuotientDescriptor(self.group_exponent, self.induced_from_exponent,
                                  self.quotient_vars, self.module_token)

    def zero_coset_count(self) -> int:
        return sum(len(v.conjugate_offsets) for v in self.quotient_vars)

    def render(self) -> str:
        text = render_quotient(self.module_token, self.quotient_vars)
        if self.suspension is not None:
            text = f"{self.suspension} {text}"
        if self.induced_from_exponent != self.group_exponent:
            text = (f"Ind_{group_name(self.induced_from_exponent)}"
                    f"^{group_name(self.group_exponent)} {text}")
        return text

    def to_row(self) -> dict:
        return {
            "grading": self.grading,
            "induced_from": group_name(self.induced_from_exponent),
            "suspension": None if self.suspension is None else {
                "multiplier": self.suspension.multiplier,
                "rep_subgroup": group_name(self.suspension.rep_subgroup_exponent),
            },
            "quotient_vars": [name for v in self.quotient_vars for name in v.names()],
            "n_f": self.n_f,
            "marking": self.marking,
            "summand": self.render(),
        }


LayerTable = Dict[int, List[LayerSummand]]


def layer_for_orbit(orbit: MarkingOrbit, k_deg: int, base_name: str = "x",
                    module_token: str = "M",
                    coned: Sequence[VariableOrbit] = ()) -> LayerSummand:
    """The summand of the associated graded attached to one marking orbit.

    Args:
        orbit: The orbit of f.
        k_deg: |x| = k_deg * rho_2.
        base_name: Name of the filtered class.
        module_token: Name of the module.
        coned: Variables already coned off in M (G-orbits), restricted to H_f
            alongside the new ones.
    """
    n = orbit.group_exponent
    stabilizer = orbit.stabilizer_exponent
    variables = []
    zeros = orbit.zero_cosets()
    if zeros:
        variables.append(VariableOrbit(base_name, tuple(zeros), stabilizer))
    variables.extend(restrict_variables(n, coned, stabilizer))
    suspension = None
    if orbit.n_f:
        suspension = Suspension(orbit.n_f * k_deg, stabilizer)
    return LayerSummand(
        grading=orbit.grading,
        induced_from_exponent=stabilizer,
        suspension=suspension,
        quotient_vars=tuple(variables),
        n_f=orbit.n_f,
        marking=str(orbit.representative),
        group_exponent=n,
        module_token=module_token,
    )


def associated_graded(n: int, k_deg: int, base_name: str = "x", module_token: str = "M",
                      coned: Sequence[VariableOrbit] = (),
                      limits: Optional[ResourceLimits] = DEFAULT_LIMITS) -> LayerTable:
    """Associated graded of the Koszul filtration of M over S[G.x], G = C_{2^n}.

    One summand per marking orbit, keyed by grading 0..2^(n-1).

    Raises:
        GroupError: For the trivial group.
        InvalidInput: For k_deg < 1.
        ResourceLimitExceeded: If n exceeds limits.max_group_exponent.
    """
    if n < 1:
        raise GroupError("the Koszul filtration needs C2 inside G (n >= 1)")
    if k_deg < 1:
        raise InvalidInput(f"the filtered class needs positive degree, got k_deg={k_deg}")
    table: LayerTable = {}
    for orbit in orbit_decompose(CyclicGroup(n), limits):
        summand = layer_for_orbit(orbit, k_deg, base_name, module_token, coned)
        table.setdefault(summand.grading, []).append(summand)
    logger.debug("associated graded of C_2^%d: %d gradings, %d summands",
                 n, len(table), sum(len(row) for row in table.values()))
    return table


def normalize_layers(table: LayerTable) -> LayerTable:
    """Put the quotient variables of every summand in conjugation normal form."""
    normalized: LayerTable = {}
    for grading in sorted(table):
        normalized[grading] = [
            replace(summand, quotient_vars=conjugation_normal_form(
                summand.group_exponent, summand.quotient_vars))
            for summand in table[grading]
        ]
    return normalized


def layer_rows(table: LayerTable) -> List[dict]:
    """Flatten a layer table to report rows, one per summand."""
    return [summand.to_row() for grading in sorted(table) for summand in table[grading]]

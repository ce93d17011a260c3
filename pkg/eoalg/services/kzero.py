"""
Formal K_0 arithmetic for fixed points of equivariant quotients.

Atoms are formal classes [(Ind Sigma^{s rho_H} M/(vars))^K]. Expressions are
integer combinations of atoms. Relations are derived by named rewrite rules
and keep their trace, so every relation can be replayed from its first step.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..config import DEFAULT_LIMITS, ResourceLimits
from ..errors import GroupError, InvalidInput
from ..logging_config import get_logger, log_with_extra
from ..utils.group_names import group_name
from .cyclic2 import CyclicGroup, check_marking_limit
from .koszul import (
    Suspension,
    VariableOrbit,
    associated_graded,
    conjugation_normal_form,
    render_quotient,
    restrict_variables,
)

logger = get_logger("kzero")


@dataclass(frozen=True)
class K0Atom:
    """The class of the K-fixed points of a (possibly induced, suspended) quotient.

    Attributes:
        module_token: Name of the module, e.g. "M".
        group_exponent: n for the ambient G = C_{2^n}.
        fixed_subgroup_exponent: k for the fixed points under C_{2^k}.
        quotient_vars: Variables coned off, as orbits inside G.
        suspension: (multiplier, subgroup) pairs in regular-representation units.
        induced_from: h when the spectrum is Ind_{C_{2^h}}^G of the rest.
    """
    module_token: str
    group_exponent: int
    fixed_subgroup_exponent: int
    quotient_vars: Tuple[VariableOrbit, ...] = ()
    suspension: Tuple[Suspension, ...] = ()
    induced_from: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "quotient_vars", tuple(self.quotient_vars))
        object.__setattr__(self, "suspension", tuple(self.suspension))
        if not 0 <= self.fixed_subgroup_exponent <= self.group_exponent:
            raise GroupError(f"{group_name(self.fixed_subgroup_exponent)} is not a subgroup "
                             f"of {group_name(self.group_exponent)}")
        if any(s.multiplier == 0 for s in self.suspension):
            raise InvalidInput("suspension multipliers must be nonzero")

    @property
    def is_quotient(self) -> bool:
        return bool(self.quotient_vars)

    @property
    def is_plain(self) -> bool:
        return not self.suspension and self.induced_from is None

    def sort_key(self):
        return (self.module_token, self.is_quotient, -self.fixed_subgroup_exponent,
                tuple((v.base_name, -v.acting_subgroup_exponent, v.conjugate_offsets)
                      for v in self.quotient_vars),
                tuple((s.rep_subgroup_exponent, s.multiplier) for s in self.suspension),
                -1 if self.induced_from is None else self.induced_from)

    def __str__(self) -> str:
        text = render_quotient(self.module_token, self.quotient_vars)
        if self.suspension:
            text = " ".join(str(s) for s in self.suspension) + f" {text}"
        if self.induced_from is not None:
            text = f"Ind_{group_name(self.induced_from)}^{group_name(self.group_exponent)} {text}"
        return f"[{text}^{group_name(self.fixed_subgroup_exponent)}]"

    def to_dict(self) -> dict:
        return {
            "module": self.module_token,
            "group": group_name(self.group_exponent),
            "fixed": group_name(self.fixed_subgroup_exponent),
            "quotient_vars": [v.to_dict() for v in self.quotient_vars],
            "suspension": [{"multiplier": s.multiplier,
                            "rep_subgroup": group_name(s.rep_subgroup_exponent)}
                           for s in self.suspension],
            "induced_from": None if self.induced_from is None else group_name(self.induced_from),
            "text": str(self),
        }


def plain_atom(module_token: str, group_exponent: int, fixed: int,
               quotient_vars: Sequence[VariableOrbit] = ()) -> K0Atom:
    """A canonical unsuspended, uninduced atom."""
    return canonical_atom(K0Atom(module_token, group_exponent, fixed, tuple(quotient_vars)))


def canonical_atom(atom: K0Atom) -> K0Atom:
    """Restrict the variables to the fixed subgroup and normalize conjugates."""
    if not atom.quotient_vars or atom.induced_from is not None:
        return atom
    variables = restrict_variables(atom.group_exponent, atom.quotient_vars,
                                   atom.fixed_subgroup_exponent)
    return replace(atom, quotient_vars=conjugation_normal_form(atom.group_exponent, variables))


@dataclass(frozen=True, eq=False)
class K0Expression:
    """An integer combination of atoms with no zero coefficients."""
    terms: Mapping[K0Atom, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {a: c for a, c in dict(self.terms).items() if c})

    @classmethod
    def of(cls, *pairs: Tuple[int, K0Atom]) -> "K0Expression":
        collected: Dict[K0Atom, int] = {}
        for coefficient, atom in pairs:
            collected[atom] = collected.get(atom, 0) + coefficient
        return cls(collected)

    @classmethod
    def atom(cls, atom: K0Atom, coefficient: int = 1) -> "K0Expression":
        return cls({atom: coefficient})

    def coefficient(self, atom: K0Atom) -> int:
        return self.terms.get(atom, 0)

    def atoms(self) -> List[K0Atom]:
        return sorted(self.terms, key=K0Atom.sort_key)

    def items(self) -> List[Tuple[K0Atom, int]]:
        return [(atom, self.terms[atom]) for atom in self.atoms()]

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "K0Expression") -> "K0Expression":
        terms = dict(self.terms)
        for atom, coefficient in other.terms.items():
            terms[atom] = terms.get(atom, 0) + coefficient
        return K0Expression(terms)

    def __neg__(self) -> "K0Expression":
        return K0Expression({a: -c for a, c in self.terms.items()})

    def __sub__(self, other: "K0Expression") -> "K0Expression":
        return self + (-other)

    def __mul__(self, factor: int) -> "K0Expression":
        return K0Expression({a: c * factor for a, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, K0Expression):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def map_atoms(self, rewrite: Callable[[K0Atom], "K0Expression"]) -> "K0Expression":
        result = K0Expression()
        for atom, coefficient in self.terms.items():
            result = result + rewrite(atom) * coefficient
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for index, (atom, coefficient) in enumerate(self.items()):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            body = f"{magnitude}{atom}" if magnitude != 1 else str(atom)
            if index == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_list(self) -> List[dict]:
        return [{"coefficient": c, "atom": a.to_dict()} for a, c in self.items()]


@dataclass(frozen=True)
class TraceStep:
    """One rule application; params are whatever the rule needs to re-run."""
    rule: str
    params: Mapping = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"rule": self.rule,
                "params": {key: _param_text(value) for key, value in self.params.items()}}


def _param_text(value):
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    if isinstance(value, (tuple, list)):
        return [_param_text(item) for item in value]
    if isinstance(value, VariableOrbit):
        return value.to_dict()
    return str(value)


@dataclass(frozen=True)
class K0Relation:
    """lhs = rhs in K_0, or lhs = rhs modulo torsion classes."""
    lhs: K0Expression
    rhs: K0Expression
    mod_torsion: bool = False
    trace: Tuple[TraceStep, ...] = ()

    def __str__(self) -> str:
        relation = "==" if self.mod_torsion else "="
        text = f"{self.lhs} {relation} {self.rhs}"
        return f"{text}  (mod torsion)" if self.mod_torsion else text

    def same_statement(self, other: "K0Relation") -> bool:
        return (self.lhs == other.lhs and self.rhs == other.rhs
                and self.mod_torsion == other.mod_torsion)

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs.to_list(),
            "rhs": self.rhs.to_list(),
            "mod_torsion": self.mod_torsion,
            "text": str(self),
            "trace": [step.to_dict() for step in self.trace],
        }


# single-atom rewrites


def uninduce_atom(atom: K0Atom) -> K0Expression:
    """[(Ind_H^G Y)^K] = [G : max(H, K)] [Y^{min(H, K)}]."""
    if atom.induced_from is None:
        return K0Expression.atom(atom)
    h, k, n = atom.induced_from, atom.fixed_subgroup_exponent, atom.group_exponent
    multiplicity = 1 << (n - max(h, k))
    return K0Expression.atom(replace(atom, induced_from=None, fixed_subgroup_exponent=min(h, k)),
                             multiplicity)


def merge_suspensions(atom: K0Atom) -> K0Atom:
    """Add multipliers of suspensions over the same subgroup; drop zeros."""
    totals: Dict[int, int] = {}
    for s in atom.suspension:
        totals[s.rep_subgroup_exponent] = totals.get(s.rep_subgroup_exponent, 0) + s.multiplier
    merged = tuple(Suspension(total, subgroup) for subgroup, total in sorted(totals.items())
                   if total)
    return replace(atom, suspension=merged)


def suspend_fixed_points(atom: K0Atom) -> K0Expression:
    """Remove one regular-representation suspension from a fixed-point class.

    [(Sigma^{s rho_H} X)^H] is [X^H] for s even and [X^{H'}] - [X^H] for s
    odd, H' the index-2 subgroup. At the trivial group the suspension is
    ordinary and contributes the sign (-1)^s.

    Raises:
        GroupError: If the suspension is not over the fixed subgroup, the atom
            is induced, or several suspensions remain.
    """
    atom = merge_suspensions(atom)
    if not atom.suspension:
        return K0Expression.atom(canonical_atom(atom))
    if atom.induced_from is not None or len(atom.suspension) != 1:
        raise GroupError(f"cannot desuspend {atom}: uninduce and merge suspensions first")
    (suspension,) = atom.suspension
    k = atom.fixed_subgroup_exponent
    if suspension.rep_subgroup_exponent != k:
        raise GroupError(f"suspension over {group_name(suspension.rep_subgroup_exponent)} "
                         f"does not match the fixed points under {group_name(k)}")
    bare = canonical_atom(replace(atom, suspension=()))
    if k == 0:
        return K0Expression.atom(bare, -1 if suspension.multiplier % 2 else 1)
    if suspension.multiplier % 2 == 0:
        return K0Expression.atom(bare)
    lower = canonical_atom(replace(atom, suspension=(), fixed_subgroup_exponent=k - 1))
    return K0Expression.of((1, lower), (-1, bare))


def _desuspend_or_flag(atom: K0Atom) -> K0Expression:
    atom = merge_suspensions(atom)
    if not atom.suspension:
        return K0Expression.atom(atom)
    if (atom.induced_from is None and len(atom.suspension) == 1
            and atom.suspension[0].rep_subgroup_exponent == atom.fixed_subgroup_exponent):
        return suspend_fixed_points(atom)
    log_with_extra(logger, logging.WARNING, "atom left unreduced", atom=str(atom))
    return K0Expression.atom(atom)


def _canonicalize(atom: K0Atom) -> K0Expression:
    return K0Expression.atom(canonical_atom(atom))


def normalize(expr: K0Expression) -> K0Expression:
    """Uninduce, desuspend, canonicalize conjugates and merge coefficients.

    Atoms with suspensions over a subgroup other than their fixed subgroup
    are left as they are and logged.
    """
    expr = expr.map_atoms(uninduce_atom)
    expr = expr.map_atoms(_desuspend_or_flag)
    return expr.map_atoms(_canonicalize)


def unreduced_atoms(expr: K0Expression) -> List[K0Atom]:
    """Atoms normalize could not reduce."""
    return [atom for atom in normalize(expr).atoms() if not atom.is_plain]


def _raw_sum(n: int, s: int) -> Tuple[Tuple[int, int], ...]:
    """[(Sigma^{s rho} X)^{C_{2^n}}] as ((fixed exponent, coefficient), ...) by the cell sum.

    Level k at suspension t needs level k at t - 1 and level k - i at
    (t - 1) * 2^i, so the table is filled from the trivial group upwards.
    """
    needed = [0] * (n + 1)
    needed[n] = s
    for k in range(n, 0, -1):
        if needed[k] < 1:
            continue
        for i in range(1, k + 1):
            needed[k - i] = max(needed[k - i], (needed[k] - 1) << i)

    rows: List[List[Dict[int, int]]] = []
    for k in range(n + 1):
        row: List[Dict[int, int]] = []
        for t in range(needed[k] + 1):
            if t == 0:
                row.append({k: 1})
                continue
            if k == 0:
                row.append({0: -1 if t % 2 else 1})
                continue
            totals: Dict[int, int] = {}

            def add(pairs: Dict[int, int], factor: int) -> None:
                for fixed, coefficient in pairs.items():
                    totals[fixed] = totals.get(fixed, 0) + factor * coefficient

            add(row[t - 1], -1)
            for i in range(1, k + 1):
                for j in range((1 << (i - 1)) + 1, (1 << i) + 1):
                    add(rows[k - i][(t - 1) << i], -1 if j % 2 else 1)
            row.append({fixed: c for fixed, c in totals.items() if c})
        rows.append(row)
    return tuple(sorted(rows[n][s].items()))


def raw_suspension_sum(n: int, m: int, module_token: str = "X",
                       limits: Optional[ResourceLimits] = DEFAULT_LIMITS) -> K0Expression:
    """[(Sigma^{m rho_G} X)^G] by iterating the cell structure of S^{rho_G}.

    One suspension contributes -[Y^G] plus, for each i, the alternating sum
    over the cells with isotropy C_{2^(n-i)}; restricting rho_G to that
    subgroup multiplies the remaining suspension by 2^i.
    """
    if m < 1:
        raise InvalidInput(f"m must be positive, got {m}")
    if n < 0:
        raise GroupError(f"negative group exponent {n}")
    check_marking_limit(CyclicGroup(n), limits)
    return K0Expression.of(*[(coefficient, plain_atom(module_token, n, fixed))
                             for fixed, coefficient in _raw_sum(n, m)])


def euler_balance(relation: K0Relation) -> Tuple[int, int]:
    """Evaluate both sides at quotient atoms -> 0, [M^H] -> [G : H]."""
    def value(expr: K0Expression) -> int:
        total = 0
        for atom, coefficient in normalize(expr).items():
            if atom.is_quotient:
                continue
            if not atom.is_plain:
                raise InvalidInput(f"cannot evaluate the unreduced atom {atom}")
            total += coefficient * (1 << (atom.group_exponent - atom.fixed_subgroup_exponent))
        return total

    return value(relation.lhs), value(relation.rhs)


# relation rules


def _rule_filtration(_: Optional[K0Relation], n: int, k_deg: int, base_name: str = "x",
                     module_token: str = "M", coned: Tuple[VariableOrbit, ...] = ()) -> K0Relation:
    """[N^G] = sum of the G-fixed classes of the associated graded of N."""
    table = associated_graded(n, k_deg, base_name, module_token, coned, limits=None)
    rhs = K0Expression()
    for grading in sorted(table):
        for summand in table[grading]:
            atom = K0Atom(
                module_token=module_token,
                group_exponent=n,
                fixed_subgroup_exponent=n,
                quotient_vars=summand.quotient_vars,
                suspension=(summand.suspension,) if summand.suspension else (),
                induced_from=(summand.induced_from_exponent
                              if summand.induced_from_exponent != n else None),
            )
            rhs = rhs + K0Expression.atom(atom)
    lhs = K0Expression.atom(plain_atom(module_token, n, n, coned))
    return K0Relation(lhs, rhs)


def _rule_reflexivity(_: Optional[K0Relation], expression: K0Expression,
                      mod_torsion: bool = False) -> K0Relation:
    return K0Relation(expression, expression, mod_torsion)


def _rule_uninduce(state: K0Relation) -> K0Relation:
    return replace(state, lhs=state.lhs.map_atoms(uninduce_atom),
                   rhs=state.rhs.map_atoms(uninduce_atom))


def _rule_desuspend(state: K0Relation) -> K0Relation:
    return replace(state, lhs=state.lhs.map_atoms(_desuspend_or_flag),
                   rhs=state.rhs.map_atoms(_desuspend_or_flag))


def _rule_canonicalize(state: K0Relation) -> K0Relation:
    return replace(state, lhs=state.lhs.map_atoms(_canonicalize),
                   rhs=state.rhs.map_atoms(_canonicalize))


def _rule_collect(state: K0Relation) -> K0Relation:
    """Move right-hand occurrences of left-hand atoms to the left."""
    moved = K0Expression({atom: state.rhs.coefficient(atom) for atom in state.lhs.atoms()})
    return replace(state, lhs=state.lhs - moved, rhs=state.rhs - moved)


def _rule_drop_torsion(state: K0Relation) -> K0Relation:
    """Treat every quotient atom as torsion."""
    def keep(expr: K0Expression) -> K0Expression:
        return K0Expression({a: c for a, c in expr.terms.items() if not a.is_quotient})

    return replace(state, lhs=keep(state.lhs), rhs=keep(state.rhs), mod_torsion=True)


def _rule_rebase(state: K0Relation, group_exponent: int) -> K0Relation:
    """View plain atoms of C_{2^k} as atoms of the restriction of a larger group."""
    def rebase(atom: K0Atom) -> K0Expression:
        if atom.is_quotient or not atom.is_plain:
            raise InvalidInput(f"only plain atoms can be rebased, got {atom}")
        return K0Expression.atom(replace(atom, group_exponent=group_exponent))

    return replace(state, lhs=state.lhs.map_atoms(rebase), rhs=state.rhs.map_atoms(rebase))


def _rule_scale(state: K0Relation, factor: int) -> K0Relation:
    return replace(state, lhs=state.lhs * factor, rhs=state.rhs * factor)


def _rule_substitute(state: K0Relation, lhs: K0Expression, rhs: K0Expression,
                     mod_torsion: bool = False) -> K0Relation:
    """Replace an occurrence of lhs in the right-hand side by rhs."""
    for atom, coefficient in lhs.terms.items():
        if state.rhs.coefficient(atom) != coefficient:
            raise InvalidInput(f"{lhs} does not occur in {state.rhs}")
    return replace(state, rhs=state.rhs - lhs + rhs,
                   mod_torsion=state.mod_torsion or mod_torsion)


STARTING_RULES = ("filtration", "reflexivity")

RULES: Dict[str, Callable[..., K0Relation]] = {
    "filtration": _rule_filtration,
    "reflexivity": _rule_reflexivity,
    "uninduce": _rule_uninduce,
    "desuspend": _rule_desuspend,
    "canonicalize": _rule_canonicalize,
    "collect": _rule_collect,
    "drop_torsion": _rule_drop_torsion,
    "rebase": _rule_rebase,
    "scale": _rule_scale,
    "substitute": _rule_substitute,
}


def apply_rule(state: Optional[K0Relation], rule: str, **params) -> K0Relation:
    """Apply a named rule and append it to the trace."""
    try:
        function = RULES[rule]
    except KeyError:
        raise InvalidInput(f"unknown rule {rule!r}") from None
    if rule in STARTING_RULES:
        trace = ()
    elif state is None:
        raise InvalidInput(f"rule {rule!r} needs a relation to act on")
    else:
        trace = state.trace
    result = function(state, **params)
    return replace(result, trace=trace + (TraceStep(rule, dict(params)),))


def replay(relation: K0Relation) -> K0Relation:
    """Re-execute a trace from its first step."""
    state = None
    for step in relation.trace:
        state = apply_rule(state, step.rule, **step.params)
    if state is None:
        raise InvalidInput("empty trace")
    return state


def quotient_relation(n: int, k_deg: int, base_name: str = "x", module_token: str = "M",
                      coned: Sequence[VariableOrbit] = (),
                      limits: Optional[ResourceLimits] = DEFAULT_LIMITS) -> K0Relation:
    """The K_0 relation 2[N^G] = [N^{G'}] + ... from the Koszul filtration of N.

    N is M with the G-orbits in coned already coned off (M itself by default).

    Raises:
        InvalidInput: If k_deg is even.
        ResourceLimitExceeded: If n exceeds limits.max_group_exponent.
        GroupError: If n < 1.
    """
    if k_deg % 2 == 0:
        raise InvalidInput(f"the filtered class must have odd degree, got k_deg={k_deg}")
    if n < 1:
        raise GroupError("the quotient relation needs n >= 1")
    check_marking_limit(CyclicGroup(n), limits)
    coned = tuple(coned)
    for variable in coned:
        if variable.acting_subgroup_exponent != n:
            raise GroupError(f"coned variable {variable.base_name} must be a G-orbit")
    state = apply_rule(None, "filtration", n=n, k_deg=k_deg, base_name=base_name,
                       module_token=module_token, coned=coned)
    for rule in ("uninduce", "desuspend", "canonicalize", "collect"):
        state = apply_rule(state, rule)
    logger.debug("quotient relation for n=%d: %s", n, state)
    return state


def _height_token(m: Optional[int], group_exponent: int) -> str:
    if m is None:
        return "M"
    return f"BP(({group_name(group_exponent)}))<{m}>"


def derive_height_drop(n: int, m: Optional[int] = None, module_token: Optional[str] = None,
                       limits: Optional[ResourceLimits] = DEFAULT_LIMITS) -> List[K0Relation]:
    """Relations 2^k [M^{C_{2^k}}] == [M^e] modulo torsion, for k = 0..n.

    The k-th relation comes from the quotient relation of C_{2^k} acting on
    M through the class t_1, with every quotient atom treated as torsion,
    scaled by 2^(k-1) and combined with the (k-1)-st.
    """
    if n < 0:
        raise GroupError(f"negative group exponent {n}")
    check_marking_limit(CyclicGroup(n), limits)
    token = module_token or _height_token(m, n)
    base = K0Expression.atom(plain_atom(token, n, 0))
    relations = [apply_rule(None, "reflexivity", expression=base, mod_torsion=True)]
    for k in range(1, n + 1):
        state = quotient_relation(k, 1, base_name="t1", module_token=token, limits=limits)
        state = apply_rule(state, "drop_torsion")
        state = apply_rule(state, "rebase", group_exponent=n)
        if k > 1:
            state = apply_rule(state, "scale", factor=1 << (k - 1))
        previous = relations[-1]
        state = apply_rule(state, "substitute", lhs=previous.lhs, rhs=previous.rhs,
                           mod_torsion=True)
        relations.append(state)
    return relations


def relation_rows(relations: Iterable[K0Relation]) -> List[dict]:
    return [relation.to_dict() for relation in relations]

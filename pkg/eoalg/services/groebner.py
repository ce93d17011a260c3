"""
Buchberger's algorithm over F2 and the ideal-theoretic queries built on it.

Internally a polynomial over F2 is a frozenset of exponent vectors, so
addition is symmetric difference. Monomial arithmetic comes from
sympy.polys.monomials and orders are sympy MonomialOrder objects.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.orderings import MonomialOrder

from ..config import DEFAULT_LIMITS, ResourceLimits
from ..errors import PolynomialError, ResourceLimitExceeded
from ..logging_config import get_logger, log_with_extra
from .f2poly import GeneratorTable, Monomial, Polynomial, monomial_order
from .hilbert import IntPolynomial

logger = get_logger("groebner")

Terms = FrozenSet[Monomial]

SLACK_VARIABLE = "_slack"


@dataclass(frozen=True)
class IdealSpec:
    """An ideal of F2[generators] with the monomial order used to study it."""
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise PolynomialError("an ideal needs at least one generator")
        table = self.generators[0].table
        for generator in self.generators:
            if generator.is_zero():
                raise PolynomialError("ideal generators must be nonzero")
            if generator.table != table:
                raise PolynomialError("ideal generators live over different tables")
            if generator.characteristic != 2:
                raise PolynomialError("ideals are taken over F2")

    @classmethod
    def of(cls, generators: Sequence[Polynomial], order: Optional[MonomialOrder] = None,
           order_name: str = "wgrevlex") -> "IdealSpec":
        """Build an ideal, dropping zero generators; default weighted grevlex."""
        nonzero = tuple(g.reduce_mod2() for g in generators if g.reduce_mod2())
        if not nonzero:
            raise PolynomialError("the zero ideal is not supported; add a nonzero generator")
        table = nonzero[0].table
        return cls(nonzero, order or monomial_order(table, order_name))

    @property
    def table(self) -> GeneratorTable:
        return self.generators[0].table


class _Budget:
    """Counts reduction steps against max_reductions."""

    def __init__(self, limits: ResourceLimits):
        self.limits = limits
        self.used = 0

    def spend(self, steps: int) -> None:
        self.used += steps
        if self.used > self.limits.max_reductions:
            _limit_hit("max_reductions", self.limits.max_reductions, self.used)


def _limit_hit(cap: str, limit: int, observed: int) -> None:
    log_with_extra(logger, logging.WARNING, "groebner resource limit hit",
                   cap=cap, limit=limit, observed=observed)
    raise ResourceLimitExceeded(cap, limit, observed)


def _lead(terms: Terms, order: MonomialOrder) -> Monomial:
    return max(terms, key=order)


def _to_terms(polynomial: Polynomial) -> Terms:
    return frozenset(polynomial.reduce_mod2().terms)


def _from_terms(table: GeneratorTable, terms: Terms) -> Polynomial:
    return Polynomial(table, {exponents: 1 for exponents in terms}, 2)


def _times_monomial(terms: Terms, monomial: Monomial) -> Terms:
    return frozenset(monomial_mul(m, monomial) for m in terms)


def _reduce(terms: Terms, basis: Sequence[Tuple[Monomial, Terms]],
            order: MonomialOrder) -> Tuple[Terms, int]:
    """Full reduction of terms by basis; returns (remainder, steps)."""
    pending = set(terms)
    remainder = set()
    steps = 0
    while pending:
        top = max(pending, key=order)
        for lead, element in basis:
            quotient = monomial_div(top, lead)
            if quotient is not None:
                pending.symmetric_difference_update(_times_monomial(element, quotient))
                steps += 1
                break
        else:
            pending.remove(top)
            remainder.add(top)
    return frozenset(remainder), steps


def _s_polynomial(left: Tuple[Monomial, Terms], right: Tuple[Monomial, Terms]) -> Terms:
    lcm = monomial_lcm(left[0], right[0])
    return (_times_monomial(left[1], monomial_div(lcm, left[0]))
            ^ _times_monomial(right[1], monomial_div(lcm, right[0])))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _weighted(table: GeneratorTable, monomial: Monomial) -> int:
    return sum(w * e for w, e in zip(table.degrees, monomial))


def _buchberger(ideal: IdealSpec, limits: ResourceLimits) -> List[Tuple[Monomial, Terms]]:
    order = ideal.order
    table = ideal.table
    budget = _Budget(limits)
    basis: List[Tuple[Monomial, Terms]] = []
    pairs = set()

    def add(terms: Terms) -> None:
        lead = _lead(terms, order)
        degree = max(_weighted(table, m) for m in terms)
        if degree > limits.max_degree:
            _limit_hit("max_degree", limits.max_degree, degree)
        basis.append((lead, terms))
        if len(basis) > limits.max_basis_size:
            _limit_hit("max_basis_size", limits.max_basis_size, len(basis))
        new = len(basis) - 1
        pairs.update((old, new) for old in range(new))

    for generator in sorted((_to_terms(g) for g in ideal.generators),
                            key=lambda terms: order(_lead(terms, order))):
        remainder, steps = _reduce(generator, basis, order)
        budget.spend(steps)
        if remainder:
            add(remainder)

    executor = ThreadPoolExecutor(max_workers=limits.workers) if limits.workers > 1 else None
    try:
        while pairs:
            def pair_degree(pair):
                return _weighted(table, monomial_lcm(basis[pair[0]][0], basis[pair[1]][0]))

            lowest = min(pair_degree(pair) for pair in pairs)
            batch = sorted(pair for pair in pairs if pair_degree(pair) == lowest)
            pairs.difference_update(batch)
            batch = [pair for pair in batch
                     if not _coprime(basis[pair[0]][0], basis[pair[1]][0])]
            snapshot = list(basis)
            s_polys = [_s_polynomial(snapshot[i], snapshot[j]) for i, j in batch]
            if executor is not None:
                results = list(executor.map(lambda s: _reduce(s, snapshot, order), s_polys))
            else:
                results = [_reduce(s, snapshot, order) for s in s_polys]
            for remainder, steps in results:
                budget.spend(steps)
                if not remainder:
                    continue
                # the basis may have grown since the snapshot
                remainder, steps = _reduce(remainder, basis, order)
                budget.spend(steps)
                if remainder:
                    add(remainder)
            logger.debug("degree %d: %d pairs, basis size %d, %d pairs left",
                         lowest, len(batch), len(basis), len(pairs))
    finally:
        if executor is not None:
            executor.shutdown(wait=True)
    return basis


def _interreduce(basis: List[Tuple[Monomial, Terms]],
                 order: MonomialOrder) -> List[Tuple[Monomial, Terms]]:
    """Minimal basis with every element fully reduced by the others."""
    ordered = sorted(basis, key=lambda item: order(item[0]))
    minimal: List[Tuple[Monomial, Terms]] = []
    for lead, terms in ordered:
        if any(monomial_divides(other, lead) for other, _ in minimal):
            continue
        minimal.append((lead, terms))
    reduced = []
    for index, (lead, terms) in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        tail, _ = _reduce(terms - {lead}, others, order)
        reduced.append((lead, tail | {lead}))
    return reduced


def groebner(ideal: IdealSpec, limits: ResourceLimits = DEFAULT_LIMITS) -> List[Polynomial]:
    """The reduced Groebner basis, sorted by increasing leading monomial.

    Raises:
        ResourceLimitExceeded: When max_degree, max_basis_size or max_reductions is hit.
    """
    basis = _interreduce(_buchberger(ideal, limits), ideal.order)
    logger.debug("reduced basis of %d generators has %d elements",
                 len(ideal.generators), len(basis))
    return [_from_terms(ideal.table, terms) for _, terms in basis]


def _basis_pairs(basis: Sequence[Polynomial], order: MonomialOrder):
    return [(_lead(_to_terms(b), order), _to_terms(b)) for b in basis if b]


def normal_form(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of p under full reduction by basis."""
    remainder, _ = _reduce(_to_terms(p), _basis_pairs(basis, order), order)
    return _from_terms(p.table, remainder)


def divide(p: Polynomial, basis: Sequence[Polynomial],
           order: MonomialOrder) -> Tuple[List[Polynomial], Polynomial]:
    """Multivariate division: p = sum q_i * basis[i] + r.

    No term of r is divisible by a leading monomial of basis.
    """
    pairs = [(_lead(_to_terms(b), order), _to_terms(b)) if b else (None, frozenset())
             for b in basis]
    quotients = [set() for _ in basis]
    pending = set(_to_terms(p))
    remainder = set()
    while pending:
        top = max(pending, key=order)
        for index, (lead, terms) in enumerate(pairs):
            if lead is None:
                continue
            quotient = monomial_div(top, lead)
            if quotient is not None:
                quotients[index].symmetric_difference_update({quotient})
                pending.symmetric_difference_update(_times_monomial(terms, quotient))
                break
        else:
            pending.remove(top)
            remainder.add(top)
    return ([_from_terms(p.table, frozenset(q)) for q in quotients],
            _from_terms(p.table, frozenset(remainder)))


def in_ideal(p: Polynomial, ideal: IdealSpec, limits: ResourceLimits = DEFAULT_LIMITS) -> bool:
    """Whether p reduces to zero modulo the reduced basis."""
    return normal_form(p, groebner(ideal, limits), ideal.order).is_zero()


def contains_one(basis: Sequence[Polynomial]) -> bool:
    return any(b.is_constant() and b for b in basis)


def is_nilpotent(p: Polynomial, ideal: IdealSpec, limits: ResourceLimits = DEFAULT_LIMITS) -> bool:
    """Whether p lies in the radical of the ideal.

    First tries p^(2^j) in I for 2^j up to nilpotence_power_cap; then decides
    with a slack variable y: p is in the radical iff 1 is in I + (1 + y p).
    """
    if p.table != ideal.table:
        raise PolynomialError("element and ideal live over different tables")
    basis = groebner(ideal, limits)
    if contains_one(basis):
        return True
    power = normal_form(p, basis, ideal.order)
    exponent = 1
    while exponent <= limits.nilpotence_power_cap:
        if power.is_zero():
            logger.debug("%s^%d lies in the ideal", p, exponent)
            return True
        power = normal_form(power * power, basis, ideal.order)
        exponent *= 2
    extended = ideal.table.with_variable(SLACK_VARIABLE, 1)
    slack = Polynomial.variable(extended, SLACK_VARIABLE)
    generators = [g.lift(extended) for g in ideal.generators]
    generators.append(Polynomial.constant(extended) + slack * p.lift(extended))
    saturated = IdealSpec.of(generators, monomial_order(extended))
    return contains_one(groebner(saturated, limits))


def _pure_power_bounds(leads: Sequence[Monomial], arity: int) -> Optional[List[int]]:
    """Smallest pure power of each variable among leads, or None if one is missing."""
    bounds: List[Optional[int]] = [None] * arity
    for lead in leads:
        support = [index for index, e in enumerate(lead) if e]
        if len(support) == 1:
            index = support[0]
            if bounds[index] is None or lead[index] < bounds[index]:
                bounds[index] = lead[index]
    if any(bound is None for bound in bounds):
        return None
    return bounds


def _staircase(leads: Sequence[Monomial], bounds: Sequence[int], cap: int) -> List[Monomial]:
    """Monomials below the pure-power box not divisible by any lead."""
    arity = len(bounds)
    found: List[Monomial] = []
    current = [0] * arity
    visited = 0

    def divisible() -> bool:
        return any(monomial_divides(lead, tuple(current)) for lead in leads)

    def walk(position: int) -> None:
        nonlocal visited
        if position == arity:
            found.append(tuple(current))
            return
        for exponent in range(bounds[position]):
            current[position] = exponent
            visited += 1
            if visited > cap:
                _limit_hit("max_staircase", cap, visited)
            if divisible():
                break
            walk(position + 1)
        current[position] = 0

    walk(0)
    return found


def standard_monomials(ideal: IdealSpec, limits: ResourceLimits = DEFAULT_LIMITS,
                       basis: Optional[Sequence[Polynomial]] = None) -> Optional[List[Monomial]]:
    """Monomials outside the leading ideal; None when there are infinitely many."""
    basis = basis if basis is not None else groebner(ideal, limits)
    if contains_one(basis):
        return []
    leads = [b.leading_monomial(ideal.order) for b in basis]
    bounds = _pure_power_bounds(leads, ideal.table.arity)
    if bounds is None:
        return None
    return _staircase(leads, bounds, limits.max_staircase)


def quotient_dim(ideal: IdealSpec, limits: ResourceLimits = DEFAULT_LIMITS) -> Union[int, float]:
    """F2-dimension of F2[generators]/I; math.inf when the quotient is infinite."""
    monomials = standard_monomials(ideal, limits)
    if monomials is None:
        return math.inf
    return len(monomials)


def staircase_series(ideal: IdealSpec, limits: ResourceLimits = DEFAULT_LIMITS) -> IntPolynomial:
    """Hilbert series of a finite quotient, read off the standard monomials.

    Raises:
        PolynomialError: If the quotient is infinite.
    """
    monomials = standard_monomials(ideal, limits)
    if monomials is None:
        raise PolynomialError("the quotient is infinite; its series is not a polynomial")
    degrees = [_weighted(ideal.table, m) for m in monomials]
    counts = [0] * (max(degrees, default=-1) + 1)
    for degree in degrees:
        counts[degree] += 1
    return IntPolynomial(tuple(counts))

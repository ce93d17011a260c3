"""
Cyclic 2-groups and their C2-equivariant markings.

A marking is a C2-equivariant function f: G -> {0, 1}. Since it is constant on
the cosets {g, sigma*g} it is stored as one bit per coset, so every bit
vector of length 2^(n-1) is a valid marking. G acts on markings by
translation, which on cosets is the cyclic rotation of the bit vector.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import List, Optional, Tuple

from sympy import divisors, totient

from ..config import DEFAULT_LIMITS, ResourceLimits
from ..errors import GroupError, ResourceLimitExceeded
from ..logging_config import get_logger

logger = get_logger("cyclic2")


@dataclass(frozen=True)
class CyclicGroup:
    """The cyclic group C_{2^n}, elements as residues mod 2^n, generator 1."""
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise GroupError(f"group exponent must be non-negative, got {self.n}")

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def generator(self) -> int:
        return 1 % self.order

    @property
    def sigma(self) -> int:
        """The unique element of order 2."""
        if self.n == 0:
            raise GroupError("the trivial group has no element of order 2")
        return 1 << (self.n - 1)

    @property
    def coset_count(self) -> int:
        """Number of C2-cosets, |G/C2|."""
        if self.n == 0:
            raise GroupError("the trivial group does not contain C2")
        return 1 << (self.n - 1)

    def elements(self) -> List[int]:
        return list(range(self.order))

    def subgroup_order(self, k: int) -> int:
        self.check_subgroup(k)
        return 1 << k

    def index(self, k: int) -> int:
        """[G : C_{2^k}]."""
        self.check_subgroup(k)
        return 1 << (self.n - k)

    def subgroup_elements(self, k: int) -> List[int]:
        """Residues of C_{2^k}: the multiples of 2^(n-k)."""
        step = self.index(k)
        return list(range(0, self.order, step))

    def check_subgroup(self, k: int) -> None:
        if not 0 <= k <= self.n:
            raise GroupError(f"C_{{2^{k}}} is not a subgroup of C_{{2^{self.n}}}")


def subgroups(group: CyclicGroup) -> List[int]:
    """Subgroup lattice of C_{2^n} as the chain of exponents 0..n."""
    return list(range(group.n + 1))


@dataclass(frozen=True, order=True)
class Marking:
    """A C2-equivariant function G -> {0,1}, one bit per C2-coset."""
    bits: Tuple[int, ...]

    def value(self, g: int) -> int:
        """f(g) for a group element given as a residue."""
        return self.bits[g % len(self.bits)]

    def rotate(self, shift: int) -> "Marking":
        """The translate g -> f(g + shift)."""
        size = len(self.bits)
        shift %= size
        return Marking(self.bits[shift:] + self.bits[:shift])

    @property
    def ones(self) -> int:
        """Number of cosets marked 1."""
        return sum(self.bits)

    @cached_property
    def period(self) -> int:
        """Smallest rotation fixing the marking (a power of 2)."""
        size = len(self.bits)
        step = 1
        while step < size and self.rotate(step) != self:
            step <<= 1
        return step

    def preimage_size(self, value: int) -> int:
        """|f^{-1}(value)| counted as a subset of G."""
        return 2 * sum(1 for bit in self.bits if bit == value)

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self.bits)


@dataclass(frozen=True)
class MarkingOrbit:
    """A G-orbit of markings with its stabilizer and grading data.

    Attributes:
        representative: Lexicographically smallest marking of the orbit.
        stabilizer_exponent: k with H_f = C_{2^k}.
        orbit_size: Number of markings in the orbit, [G : H_f].
        n_f: |f^{-1}(1)/H_f|.
        grading: (1/2)|f^{-1}(1)|, the number of cosets marked 1.
        group_exponent: n for G = C_{2^n}.
    """
    representative: Marking
    stabilizer_exponent: int
    orbit_size: int
    n_f: int
    grading: int
    group_exponent: int

    @property
    def stabilizer_order(self) -> int:
        return 1 << self.stabilizer_exponent

    @property
    def is_constant(self) -> bool:
        return self.grading in (0, len(self.representative.bits))

    def zero_cosets(self) -> List[int]:
        """Residues r < [G:H_f] with f(r) = 0: the cosets f^{-1}(0)/H_f."""
        return [r for r in range(self.orbit_size) if self.representative.value(r) == 0]

    def one_cosets(self) -> List[int]:
        """Residues r < [G:H_f] with f(r) = 1: the cosets f^{-1}(1)/H_f."""
        return [r for r in range(self.orbit_size) if self.representative.value(r) == 1]


def _require_c2(group: CyclicGroup) -> None:
    if group.n < 1:
        raise GroupError("markings need C2 inside G; the trivial group has none")


def check_marking_limit(group: CyclicGroup,
                        limits: Optional[ResourceLimits] = DEFAULT_LIMITS) -> None:
    """Refuse groups whose markings are too many to enumerate. None disables the cap."""
    if limits is not None and group.n > limits.max_group_exponent:
        raise ResourceLimitExceeded("max_group_exponent", limits.max_group_exponent, group.n)


def enumerate_markings(group: CyclicGroup,
                       limits: Optional[ResourceLimits] = DEFAULT_LIMITS) -> List[Marking]:
    """All 2^(2^(n-1)) markings in lexicographic order of their bit vectors."""
    _require_c2(group)
    check_marking_limit(group, limits)
    return [Marking(bits) for bits in product((0, 1), repeat=group.coset_count)]


def orbit_of(marking: Marking) -> List[Marking]:
    """The distinct translates of a marking."""
    return sorted({marking.rotate(shift) for shift in range(marking.period)})


def make_orbit(group: CyclicGroup, marking: Marking) -> MarkingOrbit:
    """Build the orbit record of a marking, using its canonical representative."""
    representative = min(orbit_of(marking))
    orbit_size = representative.period
    stabilizer_order = group.order // orbit_size
    stabilizer_exponent = stabilizer_order.bit_length() - 1
    grading = representative.ones
    n_f = representative.preimage_size(1) // stabilizer_order
    return MarkingOrbit(
        representative=representative,
        stabilizer_exponent=stabilizer_exponent,
        orbit_size=orbit_size,
        n_f=n_f,
        grading=grading,
        group_exponent=group.n,
    )


def orbit_decompose(group: CyclicGroup,
                    limits: Optional[ResourceLimits] = DEFAULT_LIMITS) -> List[MarkingOrbit]:
    """Decompose the markings of G into G-orbits.

    Orbits are sorted by grading, then by decreasing stabilizer (the order in
    which the layers of the Koszul filtration are usually displayed), then by
    representative.
    """
    _require_c2(group)
    seen = set()
    orbits = []
    for marking in enumerate_markings(group, limits):
        if marking in seen:
            continue
        members = orbit_of(marking)
        seen.update(members)
        orbits.append(make_orbit(group, marking))
    orbits.sort(key=lambda orbit: (orbit.grading, -orbit.stabilizer_exponent,
                                   orbit.representative.bits))
    logger.debug("C_2^%d: %d markings in %d orbits", group.n, len(seen), len(orbits))
    return orbits


def burnside_orbit_count(group: CyclicGroup) -> int:
    """Count orbits with Burnside's lemma over the rotations of G/C2.

    Rotation by g on N = |G/C2| cosets has gcd(g, N) cycles, so it fixes
    2^gcd(g, N) markings; exactly phi(N/d) rotations have gcd d.
    """
    _require_c2(group)
    size = group.coset_count
    fixed = sum(int(totient(size // d)) << d for d in divisors(size))
    return fixed // size


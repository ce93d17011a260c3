"""
Euler characteristics against generalized Moore spectra and the 2-adic gate
that rules shapes S/(2^i0, v_1^i1, ..., v_h^ih) out.
"""
from dataclasses import dataclass
from enum import Enum
from math import prod
from typing import Dict, Mapping, Tuple

from sympy import factorint, multiplicity

from ..config import DEFAULT_LIMITS, ResourceLimits
from ..errors import HeightMismatch, InvalidInput
from ..logging_config import get_logger
from .hilbert import HeightContext, dimension

logger = get_logger("moore")

CAVEAT = "existence not implied"


@dataclass(frozen=True)
class MooreShape:
    """Exponents (i_0, i_1, ..., i_h) of a candidate generalized Moore spectrum."""
    exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if not self.exponents:
            raise InvalidInput("a Moore shape needs at least the exponent of 2")
        if any(e < 1 for e in self.exponents):
            raise InvalidInput(f"Moore exponents must be positive: {self.exponents}")

    @property
    def h(self) -> int:
        return len(self.exponents) - 1

    def __str__(self) -> str:
        parts = [f"2^{self.exponents[0]}" if self.exponents[0] != 1 else "2"]
        for index, exponent in enumerate(self.exponents[1:], start=1):
            parts.append(f"v{index}" if exponent == 1 else f"v{index}^{exponent}")
        return f"S/({', '.join(parts)})"


@dataclass(frozen=True)
class HomotopyTable:
    """Orders |pi_i| of finitely many nonzero homotopy groups."""
    orders: Mapping[int, int]
    prime: int = 2

    def __post_init__(self):
        object.__setattr__(self, "orders", dict(self.orders))
        for degree, order in self.orders.items():
            if order < 1:
                raise InvalidInput(f"|pi_{degree}| must be at least 1, got {order}")


def nu2(value: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if value == 0:
        raise InvalidInput("the 2-adic valuation of 0 is infinite")
    return int(multiplicity(2, abs(value)))


def _p_log(order: int, prime: int) -> int:
    if order == 1:
        return 0
    factors = factorint(order)
    if set(factors) != {prime}:
        raise InvalidInput(f"{order} is not a power of {prime}")
    return factors[prime]


def euler_characteristic(table: HomotopyTable) -> int:
    """sum_i (-1)^i log_p |pi_i|."""
    return sum((-1) ** (degree % 2) * _p_log(order, table.prime)
               for degree, order in table.orders.items())


def chi_bp(shape: MooreShape) -> int:
    """Euler characteristic against BP<h>: the product of the exponents."""
    return prod(shape.exponents)


def chi_eo(ctx: HeightContext, shape: MooreShape,
           limits: ResourceLimits = DEFAULT_LIMITS) -> int:
    """Euler characteristic against the fixed points at height h = 2^(n-1) m.

    Raises:
        HeightMismatch: If the shape's height differs from ctx.h.
    """
    if shape.h != ctx.h:
        raise HeightMismatch(f"shape {shape} has height {shape.h}, the context has h={ctx.h}")
    return dimension(ctx, limits) * chi_bp(shape)


def divisibility_bound(h: int) -> int:
    """2^(nu2(h)+1): the power of 2 dividing every chi_BP<h> of a type-(h+1) complex."""
    if h < 1:
        raise InvalidInput(f"height must be positive, got {h}")
    return 1 << (nu2(h) + 1)


class Status(str, Enum):
    RULED_OUT = "RuledOut"
    NOT_RULED_OUT = "NotRuledOut"


@dataclass(frozen=True)
class Witness:
    product_nu2: int
    height_nu2: int
    bound: int


@dataclass(frozen=True)
class Verdict:
    shape: MooreShape
    status: Status
    witness: Witness

    @property
    def ruled_out(self) -> bool:
        return self.status is Status.RULED_OUT

    @property
    def caveat(self) -> str:
        return "" if self.ruled_out else CAVEAT

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape.exponents),
            "spectrum": str(self.shape),
            "h": self.shape.h,
            "status": self.status.value,
            "witness": {
                "product": chi_bp(self.shape),
                "product_nu2": self.witness.product_nu2,
                "height_nu2": self.witness.height_nu2,
                "bound": self.witness.bound,
            },
            "caveat": self.caveat,
        }


def moore_gate(shape: MooreShape) -> Verdict:
    """RuledOut iff nu2(i_0 ... i_h) <= nu2(h).

    Raises:
        InvalidInput: For h = 0, where no constraint applies.
    """
    if shape.h < 1:
        raise InvalidInput("the gate needs h >= 1")
    witness = Witness(nu2(chi_bp(shape)), nu2(shape.h), divisibility_bound(shape.h))
    status = Status.RULED_OUT if witness.product_nu2 <= witness.height_nu2 else Status.NOT_RULED_OUT
    logger.info("%s: %s", shape, status.value)
    return Verdict(shape, status, witness)


def euler_report(ctx: HeightContext, shape: MooreShape,
                 limits: ResourceLimits = DEFAULT_LIMITS) -> Dict[str, int]:
    """chi_eo, chi_BP<h> and their 2-adic valuations, which agree."""
    eo = chi_eo(ctx, shape, limits)
    bp = chi_bp(shape)
    return {"chi_eo": eo, "chi_bp": bp, "chi_eo_nu2": nu2(eo), "chi_bp_nu2": nu2(bp)}

"""
Poincare series and dimensions of pi^e_* BP^((G))<m> / (2, v_1, ..., v_h).

All degrees are halved, so |t_i| = |v_i| = 2^i - 1. Series are exact integer
polynomials; when the dense series is too large to expand, the cyclotomic
factorization still decides exactness and gives f(1).
"""
import logging
from dataclasses import dataclass
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Poly, cyclotomic_poly, divisors, factorint, symbols, totient

from ..config import DEFAULT_LIMITS, ResourceLimits
from ..errors import GroupError, InvalidInput, NonExactDivision, ResourceLimitExceeded
from ..logging_config import get_logger, log_with_extra

logger = get_logger("hilbert")


@dataclass(frozen=True)
class HeightContext:
    """G = C_{2^n}, truncation m and height h = 2^(n-1) m."""
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise GroupError(f"the height context needs n >= 1, got n={self.n}")
        if self.m < 0:
            raise InvalidInput(f"m must be non-negative, got m={self.m}")

    @property
    def h(self) -> int:
        return (1 << (self.n - 1)) * self.m

    @property
    def half_order(self) -> int:
        """|G|/2, the number of conjugates of each t_i."""
        return 1 << (self.n - 1)

    def numerator_exponents(self) -> List[int]:
        """The b with a factor (1 - x^b) in the numerator: |v_1|, ..., |v_h|."""
        return [(1 << i) - 1 for i in range(1, self.h + 1)]

    def denominator_exponents(self) -> List[int]:
        """The b with a factor (1 - x^b) in the denominator, with multiplicity."""
        return [(1 << i) - 1 for i in range(1, self.m + 1) for _ in range(self.half_order)]

    def series_degree(self) -> int:
        return sum(self.numerator_exponents()) - sum(self.denominator_exponents())


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coefficients[i] is the coefficient of x^i."""
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = list(self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def one_minus_power(cls, exponent: int) -> "IntPolynomial":
        """1 - x^exponent."""
        if exponent <= 0:
            raise InvalidInput(f"exponent must be positive, got {exponent}")
        coefficients = [0] * (exponent + 1)
        coefficients[0] = 1
        coefficients[exponent] = -1
        return cls(tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def value_at_one(self) -> int:
        return sum(self.coefficients)

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        result = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    result[i + j] += a * b
        return IntPolynomial(tuple(result))

    def times_one_minus_power(self, exponent: int) -> "IntPolynomial":
        """Multiply by 1 - x^exponent in one pass."""
        result = list(self.coefficients) + [0] * exponent
        for i, a in enumerate(self.coefficients):
            result[i + exponent] -= a
        return IntPolynomial(tuple(result))

    def divide_one_minus_power(self, exponent: int) -> "IntPolynomial":
        """Exact quotient by 1 - x^exponent.

        Raises:
            NonExactDivision: If 1 - x^exponent does not divide the polynomial.
        """
        if not self.coefficients:
            return self
        running = list(self.coefficients)
        for i in range(exponent, len(running)):
            running[i] += running[i - exponent]
        quotient_degree = self.degree - exponent
        if quotient_degree < 0 or any(running[quotient_degree + 1:]):
            raise NonExactDivision(f"1 - x^{exponent} does not divide a polynomial of "
                                   f"degree {self.degree}")
        return IntPolynomial(tuple(running[:quotient_degree + 1]))

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def terms(self) -> List[Tuple[int, int]]:
        """Sparse (degree, coefficient) pairs."""
        return [(i, c) for i, c in enumerate(self.coefficients) if c]

    def __str__(self) -> str:
        parts = []
        for degree, coefficient in self.terms():
            if degree == 0:
                parts.append(str(coefficient))
            else:
                power = "x" if degree == 1 else f"x^{degree}"
                parts.append(power if coefficient == 1 else f"{coefficient}{power}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def gaussian_binomial(N: int, M: int) -> int:
    """The Gaussian binomial coefficient (N over M) at q = 2."""
    if N < 0 or M < 0:
        raise InvalidInput(f"Gaussian binomial needs non-negative arguments, got ({N}, {M})")
    if M > N:
        return 0
    numerator = prod(1 - (1 << (N - i)) for i in range(M))
    denominator = prod(1 - (1 << i) for i in range(1, M + 1))
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise NonExactDivision(f"Gaussian binomial ({N}, {M}) is not integral")
    return value


def poincare_series(ctx: HeightContext,
                    limits: ResourceLimits = DEFAULT_LIMITS) -> IntPolynomial:
    """Poincare series of the quotient by (2, v_1, ..., v_h), by exact division.

    Raises:
        ResourceLimitExceeded: If the series degree exceeds max_series_degree.
        NonExactDivision: If a denominator factor leaves a remainder.
    """
    degree = ctx.series_degree()
    if degree > limits.max_series_degree:
        log_with_extra(logger, logging.WARNING, "dense series too large",
                       cap="max_series_degree", limit=limits.max_series_degree, observed=degree)
        raise ResourceLimitExceeded("max_series_degree", limits.max_series_degree, degree)
    numerator = IntPolynomial.one()
    for exponent in ctx.numerator_exponents():
        numerator = numerator.times_one_minus_power(exponent)
    series = numerator
    for exponent in sorted(ctx.denominator_exponents(), reverse=True):
        series = series.divide_one_minus_power(exponent)
    logger.debug("series for n=%d m=%d has degree %d", ctx.n, ctx.m, series.degree)
    return series


@dataclass(frozen=True)
class FactoredSeries:
    """A ratio of products of (1 - x^b) as a product of cyclotomic polynomials.

    Attributes:
        multiplicities: Exponent of Phi_d for each d with a nonzero exponent.
    """
    multiplicities: Tuple[Tuple[int, int], ...]

    @property
    def is_polynomial(self) -> bool:
        return all(exponent >= 0 for _, exponent in self.multiplicities)

    @property
    def degree(self) -> int:
        return sum(exponent * int(totient(d)) for d, exponent in self.multiplicities)

    def value_at_one(self) -> int:
        """Product of Phi_d(1)^e; Phi_d(1) is p for d = p^k and 1 otherwise."""
        if not self.is_polynomial:
            raise NonExactDivision("the series is not a polynomial")
        value = 1
        for d, exponent in self.multiplicities:
            if d == 1:
                raise NonExactDivision("Phi_1 survives, so the series vanishes at 1")
            primes = factorint(d)
            if len(primes) == 1:
                value *= next(iter(primes)) ** exponent
        return value

    def expand(self) -> IntPolynomial:
        """Multiply out the cyclotomic factors."""
        if not self.is_polynomial:
            raise NonExactDivision("the series is not a polynomial")
        x = symbols("x")
        result = Poly(1, x)
        for d, exponent in self.multiplicities:
            result *= cyclotomic_poly(d, x, polys=True) ** exponent
        coefficients = [int(c) for c in reversed(result.all_coeffs())]
        return IntPolynomial(tuple(coefficients))

    def to_dict(self) -> dict:
        return {str(d): exponent for d, exponent in self.multiplicities}


def factor_ratio(numerator: Sequence[int], denominator: Sequence[int]) -> FactoredSeries:
    """Factor prod(1 - x^a) / prod(1 - x^b) into cyclotomic polynomials.

    1 - x^a = -prod_{d | a} Phi_d, so with equally many factors on both sides
    the signs cancel.
    """
    if len(numerator) != len(denominator):
        raise InvalidInput("numerator and denominator need the same number of factors")
    counts: Dict[int, int] = {}
    for exponent, sign in [(a, 1) for a in numerator] + [(b, -1) for b in denominator]:
        for d in divisors(exponent):
            counts[d] = counts.get(d, 0) + sign
    return FactoredSeries(tuple(sorted((d, e) for d, e in counts.items() if e)))


def factored_series(ctx: HeightContext) -> FactoredSeries:
    """The Poincare series of ctx in cyclotomic factored form."""
    return factor_ratio(ctx.numerator_exponents(), ctx.denominator_exponents())


def dimension(ctx: HeightContext, limits: ResourceLimits = DEFAULT_LIMITS) -> int:
    """F2-dimension of the quotient: f_m(1).

    Uses the dense series when its degree is within max_series_degree and the
    factored form otherwise.
    """
    if ctx.series_degree() <= limits.max_series_degree:
        return poincare_series(ctx, limits).value_at_one()
    logger.info("series degree %d over cap, using the factored form for n=%d m=%d",
                ctx.series_degree(), ctx.n, ctx.m)
    return factored_series(ctx).value_at_one()


def gaussian_product(ctx: HeightContext) -> int:
    """prod_{j=0}^{|G|/2-1} (( (j+1) m over m ))_2."""
    return prod(gaussian_binomial((j + 1) * ctx.m, ctx.m) for j in range(ctx.half_order))


def series_report(ctx: HeightContext, limits: ResourceLimits = DEFAULT_LIMITS,
                  factored: bool = False) -> dict:
    """Everything the series verb prints for one context."""
    report = {"group_n": ctx.n, "m": ctx.m, "h": ctx.h, "degree": ctx.series_degree()}
    form = factored_series(ctx)
    if factored or ctx.series_degree() > limits.max_series_degree:
        report["factored"] = form.to_dict()
        report["dimension"] = form.value_at_one()
        report["coefficients"] = None
    else:
        series = poincare_series(ctx, limits)
        report["coefficients"] = list(series.coefficients)
        report["dimension"] = series.value_at_one()
        report["series"] = str(series)
    return report


def dimension_report(ctx: HeightContext, limits: ResourceLimits = DEFAULT_LIMITS) -> dict:
    """Dimension of the quotient, checked against the Gaussian product.

    Raises:
        NonExactDivision: If the two disagree or the dimension is even.
    """
    value = dimension(ctx, limits)
    product = gaussian_product(ctx)
    if value != product:
        raise NonExactDivision(
            f"f(1) = {value} for n={ctx.n} m={ctx.m} disagrees with the Gaussian product {product}")
    if value % 2 != 1:
        raise NonExactDivision(f"f(1) = {value} for n={ctx.n} m={ctx.m} is even")
    return {
        "group_n": ctx.n,
        "m": ctx.m,
        "h": ctx.h,
        "dimension": value,
        "gaussian_product": product,
        "odd": True,
        "agrees": True,
    }


def binomial_table(N: int, M: Optional[int] = None) -> List[Tuple[int, int, int]]:
    """(N, M, value) rows; all M in 0..N when M is not given."""
    columns = range(N + 1) if M is None else [M]
    return [(N, column, gaussian_binomial(N, column)) for column in columns]

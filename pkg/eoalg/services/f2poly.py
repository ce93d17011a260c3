"""
Graded polynomial rings over F2 (and Z, for sign bookkeeping).

A GeneratorTable names the variables, their halved degrees and the action of
the generator gamma of C_{2^n} as a signed permutation. Polynomials are
immutable maps from exponent vectors to coefficients; parsing and printing go
through sympy.
"""
import keyword
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.orderings import MonomialOrder, grevlex, grlex, lex

from ..errors import PolynomialError

Monomial = Tuple[int, ...]

_TRANSFORMATIONS = standard_transformations + (convert_xor,)

# Accepted input tokens: identifiers, integers, + - * ** ^ and parentheses.
_TOKEN = re.compile(r"\s*(?:([A-Za-z_]\w*)|(\d+)|(\*\*|[-+*^()]))")


@dataclass(frozen=True)
class GeneratorTable:
    """Named graded generators with a signed-permutation action.

    Attributes:
        names: Ordered generator names; they must be valid sympy identifiers.
        degrees: Halved degree of each generator.
        action: For each generator, (index of gamma * generator, sign).
    """
    names: Tuple[str, ...]
    degrees: Tuple[int, ...]
    action: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if not self.action:
            object.__setattr__(self, "action", tuple((i, 1) for i in range(len(self.names))))
        else:
            object.__setattr__(self, "action", tuple(tuple(entry) for entry in self.action))
        if len(set(self.names)) != len(self.names):
            raise PolynomialError(f"duplicate generator names in {self.names}")
        if len(self.degrees) != len(self.names) or len(self.action) != len(self.names):
            raise PolynomialError("names, degrees and action must have the same length")
        for name in self.names:
            if not name.isidentifier() or keyword.iskeyword(name):
                raise PolynomialError(f"generator name {name!r} is not an identifier")
        if any(degree < 1 for degree in self.degrees):
            raise PolynomialError(f"generator degrees must be positive: {self.degrees}")
        targets = sorted(target for target, _ in self.action)
        if targets != list(range(len(self.names))):
            raise PolynomialError(f"action is not a permutation: {self.action}")
        for source, (target, sign) in enumerate(self.action):
            if sign not in (1, -1):
                raise PolynomialError(f"action sign must be +1 or -1, got {sign}")
            if self.degrees[source] != self.degrees[target]:
                raise PolynomialError(
                    f"gamma maps {self.names[source]} to {self.names[target]} of another degree")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PolynomialError(f"unknown generator {name!r}") from None

    def degree_of(self, name: str) -> int:
        return self.degrees[self.index(name)]

    def symbols(self) -> List[sympy.Symbol]:
        return [sympy.Symbol(name) for name in self.names]

    def with_variable(self, name: str, degree: int = 1) -> "GeneratorTable":
        """A copy with one extra gamma-fixed generator appended."""
        return GeneratorTable(self.names + (name,), self.degrees + (degree,),
                              self.action + ((self.arity, 1),))

    def action_order(self) -> int:
        """Order of gamma as a signed permutation."""
        state = [(i, 1) for i in range(self.arity)]
        order = 1
        while True:
            state = [(self.action[index][0], sign * self.action[index][1])
                     for index, sign in state]
            if all(entry == (i, 1) for i, entry in enumerate(state)):
                return order
            order += 1

    def is_action_of(self, group_exponent: int) -> bool:
        """Whether gamma has order dividing 2^n, i.e. the action is a C_{2^n}-action."""
        return (1 << group_exponent) % self.action_order() == 0

    def orbit(self, name: str) -> List[str]:
        """Names of the conjugates gamma^j * name, in order."""
        start = self.index(name)
        members = [start]
        current = self.action[start][0]
        while current != start:
            members.append(current)
            current = self.action[current][0]
        return [self.names[index] for index in members]


def _check_tokens(table: GeneratorTable, text: str) -> None:
    """Reject anything but generator names, integers, arithmetic and parentheses."""
    if not isinstance(text, str) or not text.strip():
        raise PolynomialError(f"empty polynomial {text!r}")
    position, unknown = 0, set()
    text = text.rstrip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise PolynomialError(
                f"unexpected character {text[position:].lstrip()[:1]!r} in polynomial {text!r}")
        name = match.group(1)
        if name is not None and name not in table.names:
            unknown.add(name)
        position = match.end()
    if unknown:
        raise PolynomialError(f"unknown generators: {', '.join(sorted(unknown))}")


@dataclass(frozen=True, eq=False)
class Polynomial:
    """An immutable polynomial in the generators of a table.

    Coefficients are reduced mod 2 when characteristic is 2; zero coefficients
    are never stored.
    """
    table: GeneratorTable
    terms: Mapping[Monomial, int] = field(default_factory=dict)
    characteristic: int = 2

    def __post_init__(self):
        if self.characteristic not in (0, 2):
            raise PolynomialError(f"unsupported characteristic {self.characteristic}")
        cleaned: Dict[Monomial, int] = {}
        for exponents, coefficient in dict(self.terms).items():
            exponents = tuple(exponents)
            if len(exponents) != self.table.arity:
                raise PolynomialError(
                    f"exponent vector {exponents} does not match {self.table.arity} generators")
            if any(e < 0 for e in exponents):
                raise PolynomialError(f"negative exponent in {exponents}")
            if self.characteristic == 2:
                coefficient %= 2
            if coefficient:
                cleaned[exponents] = coefficient
        object.__setattr__(self, "terms", cleaned)

    # construction

    @classmethod
    def zero(cls, table: GeneratorTable, characteristic: int = 2) -> "Polynomial":
        return cls(table, {}, characteristic)

    @classmethod
    def constant(cls, table: GeneratorTable, value: int = 1,
                 characteristic: int = 2) -> "Polynomial":
        return cls(table, {(0,) * table.arity: value}, characteristic)

    @classmethod
    def variable(cls, table: GeneratorTable, name: str,
                 characteristic: int = 2) -> "Polynomial":
        exponents = [0] * table.arity
        exponents[table.index(name)] = 1
        return cls(table, {tuple(exponents): 1}, characteristic)

    @classmethod
    def monomial(cls, table: GeneratorTable, exponents: Monomial,
                 characteristic: int = 2) -> "Polynomial":
        return cls(table, {tuple(exponents): 1}, characteristic)

    @classmethod
    def parse(cls, table: GeneratorTable, text: str, characteristic: int = 2) -> "Polynomial":
        """Parse text such as "t1**3 + t1*gt1" over the table's generators."""
        _check_tokens(table, text)
        local = {symbol.name: symbol for symbol in table.symbols()}
        try:
            expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
        except (SyntaxError, TypeError, sympy.SympifyError) as error:
            raise PolynomialError(f"cannot parse polynomial {text!r}: {error}") from error
        return cls.from_sympy(table, expr, characteristic)

    @classmethod
    def from_sympy(cls, table: GeneratorTable, expr, characteristic: int = 2) -> "Polynomial":
        symbols = table.symbols()
        expr = sympy.sympify(expr)
        unknown = expr.free_symbols - set(symbols)
        if unknown:
            names = ", ".join(sorted(str(symbol) for symbol in unknown))
            raise PolynomialError(f"unknown generators: {names}")
        try:
            poly = sympy.Poly(expr, *symbols, domain="ZZ")
        except sympy.PolynomialError as error:
            raise PolynomialError(f"not a polynomial: {expr}") from error
        except CoercionFailed as error:
            raise PolynomialError(f"non-integer coefficients in {expr}") from error
        return cls(table, {exponents: int(coefficient)
                           for exponents, coefficient in poly.as_dict().items()}, characteristic)

    @classmethod
    def from_term_list(cls, table: GeneratorTable, terms: Iterable[Mapping],
                       characteristic: int = 2) -> "Polynomial":
        """Build from [{"coefficient": c, "exponents": [...]}, ...]."""
        if not isinstance(terms, (list, tuple)):
            raise PolynomialError(f"a polynomial must be a list of terms, got {terms!r}")
        collected: Dict[Monomial, int] = {}
        for term in terms:
            if not isinstance(term, Mapping):
                raise PolynomialError(f"malformed term {term!r}")
            try:
                exponents = tuple(int(e) for e in term["exponents"])
                coefficient = int(term.get("coefficient", 1))
            except (KeyError, TypeError, ValueError) as error:
                raise PolynomialError(f"malformed term {term!r}") from error
            collected[exponents] = collected.get(exponents, 0) + coefficient
        return cls(table, collected, characteristic)

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def monomials(self) -> List[Monomial]:
        return sorted(self.terms)

    def weighted_degree(self, exponents: Monomial) -> int:
        return sum(w * e for w, e in zip(self.table.degrees, exponents))

    def degrees(self) -> List[int]:
        return sorted({self.weighted_degree(exponents) for exponents in self.terms})

    @property
    def degree(self) -> int:
        """Largest halved degree of a term; -1 for the zero polynomial."""
        return max((self.weighted_degree(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_constant(self) -> bool:
        return all(not any(exponents) for exponents in self.terms)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise PolynomialError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order)

    # arithmetic

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.table != other.table:
            raise PolynomialError("polynomials over different generator tables")
        if self.characteristic != other.characteristic:
            raise PolynomialError("polynomials over different characteristics")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return Polynomial(self.table, terms, self.characteristic)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.table, {e: -c for e, c in self.terms.items()}, self.characteristic)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(self.table, {e: c * other for e, c in self.terms.items()},
                              self.characteristic)
        self._check_compatible(other)
        terms: Dict[Monomial, int] = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                exponents = tuple(x + y for x, y in zip(left, right))
                terms[exponents] = terms.get(exponents, 0) + a * b
        return Polynomial(self.table, terms, self.characteristic)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Polynomial":
        if power < 0:
            raise PolynomialError("negative powers are not polynomials")
        result = Polynomial.constant(self.table, 1, self.characteristic)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.table == other.table and self.characteristic == other.characteristic
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.table, self.characteristic, frozenset(self.terms.items())))

    def act(self, power: int = 1) -> "Polynomial":
        """Apply gamma^power through the signed permutation of the table."""
        result = self
        for _ in range(power % self.table.action_order()):
            terms: Dict[Monomial, int] = {}
            for exponents, coefficient in result.terms.items():
                image = [0] * self.table.arity
                sign = 1
                for index, e in enumerate(exponents):
                    if e:
                        target, s = self.table.action[index]
                        image[target] += e
                        sign *= s ** e
                terms[tuple(image)] = terms.get(tuple(image), 0) + sign * coefficient
            result = Polynomial(self.table, terms, self.characteristic)
        return result

    def reduce_mod2(self) -> "Polynomial":
        return Polynomial(self.table, self.terms, 2)

    def lift(self, table: GeneratorTable) -> "Polynomial":
        """Re-express over a table whose leading generators are this table's."""
        if table.names[:self.table.arity] != self.table.names:
            raise PolynomialError("target table does not extend the source table")
        padding = (0,) * (table.arity - self.table.arity)
        return Polynomial(table, {e + padding: c for e, c in self.terms.items()},
                          self.characteristic)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate at images[i] for generator i; images share one table."""
        if len(images) != self.table.arity:
            raise PolynomialError(
                f"expected {self.table.arity} images, got {len(images)}")
        target = images[0].table if images else self.table
        result = Polynomial.zero(target, self.characteristic)
        for exponents, coefficient in self.terms.items():
            term = Polynomial.constant(target, coefficient, self.characteristic)
            for image, e in zip(images, exponents):
                if e:
                    term = term * (image ** e)
            result = result + term
        return result

    # conversion

    def to_sympy(self):
        symbols = self.table.symbols()
        return sympy.Add(*[
            coefficient * sympy.Mul(*[s ** e for s, e in zip(symbols, exponents)])
            for exponents, coefficient in self.terms.items()
        ])

    def to_term_list(self) -> List[dict]:
        return [{"coefficient": self.terms[e], "exponents": list(e)} for e in sorted(self.terms)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return sympy.sstr(self.to_sympy(), order="grevlex")

    def __repr__(self) -> str:
        return f"Polynomial({self})"


class WeightedReverseLex(MonomialOrder):
    """Graded reverse lexicographic order with weighted total degree."""

    alias = "wgrevlex"
    is_global = True
    is_default = False

    def __init__(self, weights: Sequence[int]):
        self.weights = tuple(weights)

    def __call__(self, monomial: Monomial):
        return (sum(w * e for w, e in zip(self.weights, monomial)),
                tuple(reversed([-e for e in monomial])))

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightedReverseLex) and self.weights == other.weights

    def __hash__(self) -> int:
        return hash((self.alias, self.weights))

    def __repr__(self) -> str:
        return f"WeightedReverseLex({self.weights})"


_NAMED_ORDERS = {"lex": lex, "grlex": grlex, "grevlex": grevlex}


def monomial_order(table: GeneratorTable, name: str = "wgrevlex") -> MonomialOrder:
    """Monomial order by name; "wgrevlex" weights by the table's halved degrees."""
    if name == "wgrevlex":
        return WeightedReverseLex(table.degrees)
    try:
        return _NAMED_ORDERS[name]
    except KeyError:
        raise PolynomialError(
            f"unknown monomial order {name!r}; expected wgrevlex, grevlex, grlex or lex") from None


@dataclass(frozen=True)
class RelationFile:
    """Images of v_1, ..., v_h in the t-generators of pi^e_* BP^((G))<m> mod 2.

    Attributes:
        group_n: n for G = C_{2^n}.
        m: Truncation parameter.
        table: The t-generators and their conjugates.
        v_images: Image of v_i at position i-1; None where the image is unknown.
        extra_relations: Further relations known to hold.
        provenance: Free-form notes about where the data comes from.
    """
    group_n: int
    m: int
    table: GeneratorTable
    v_images: Tuple[Optional[Polynomial], ...]
    extra_relations: Tuple[Polynomial, ...] = ()
    provenance: Tuple[str, ...] = ()

    def __post_init__(self):
        for index, image in enumerate(self.v_images, start=1):
            if image is None:
                continue
            if image.table != self.table:
                raise PolynomialError(f"v{index} image is over another generator table")
            expected = (1 << index) - 1
            if image and image.degrees() != [expected]:
                raise PolynomialError(
                    f"v{index} image must be homogeneous of degree {expected}, "
                    f"got degrees {image.degrees()}")
        for relation in self.extra_relations:
            if relation.table != self.table:
                raise PolynomialError("extra relation is over another generator table")

    @property
    def h(self) -> int:
        return (1 << (self.group_n - 1)) * self.m

    def has_unknown_images(self) -> bool:
        return any(image is None for image in self.v_images)


def generator_height(degree: int) -> Optional[int]:
    """i with 2^i - 1 == degree, or None."""
    height = (degree + 1).bit_length() - 1
    return height if (1 << height) - 1 == degree else None

"""
Nilpotence and regularity checks for the ideal (2, v_1, ..., v_h).

Everything is over F2, so the 2 in the ideal is implicit. The v_i enter
through a RelationFile giving their images in the t-generators.
"""
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

from ..config import DEFAULT_LIMITS, ResourceLimits
from ..errors import HeightMismatch, PolynomialError, RelationFileError
from ..logging_config import get_logger
from .f2poly import Polynomial, RelationFile, generator_height
from .groebner import IdealSpec, is_nilpotent, quotient_dim
from .hilbert import HeightContext

logger = get_logger("regularity")


def _check_context(ctx: HeightContext, relations: RelationFile) -> None:
    if (relations.group_n, relations.m) != (ctx.n, ctx.m):
        raise HeightMismatch(
            f"relation file is for n={relations.group_n}, m={relations.m} "
            f"but the context is n={ctx.n}, m={ctx.m}")


def _known_images(relations: RelationFile) -> List[Polynomial]:
    if relations.has_unknown_images():
        unknown = [f"v{i}" for i, image in enumerate(relations.v_images, start=1) if image is None]
        raise RelationFileError(f"images of {', '.join(unknown)} are unknown")
    return list(relations.v_images)


def polynomial_generators(relations: RelationFile, m: Optional[int] = None) -> List[str]:
    """Names of the t-generators of height at most m (all of them by default)."""
    limit = relations.m if m is None else m
    names = []
    for name, degree in zip(relations.table.names, relations.table.degrees):
        height = generator_height(degree)
        if height is not None and height <= limit:
            names.append(name)
    return names


def theorem_ideal(ctx: HeightContext, relations: RelationFile) -> IdealSpec:
    """The ideal (v_1, ..., v_h, G.t_{m+1}, ..., G.t_h) plus the extra relations.

    Raises:
        HeightMismatch: If the file is for another (n, m).
        RelationFileError: If a v-image is unknown or missing.
    """
    _check_context(ctx, relations)
    images = _known_images(relations)
    if len(images) < ctx.h:
        raise RelationFileError(f"file gives {len(images)} v-images, the height is {ctx.h}")
    generators = list(images[:ctx.h])
    for name, degree in zip(relations.table.names, relations.table.degrees):
        height = generator_height(degree)
        if height is not None and ctx.m < height <= ctx.h:
            generators.append(Polynomial.variable(relations.table, name))
    generators.extend(relations.extra_relations)
    return IdealSpec.of(generators)


@dataclass(frozen=True)
class RegularityReport:
    """Outcome of the Krull-dimension regularity argument.

    Truthy exactly when the sequence is regular.
    """
    regular: bool
    sequence_length: int
    generator_count: int
    quotient_dimension: Union[int, float]
    reason: str = ""

    def __bool__(self) -> bool:
        return self.regular

    def to_dict(self) -> dict:
        dimension = self.quotient_dimension
        return {
            "regular": self.regular,
            "sequence_length": self.sequence_length,
            "generator_count": self.generator_count,
            "quotient_dimension": "infinite" if dimension == math.inf else dimension,
            "reason": self.reason,
        }


def verify_regularity(ctx: HeightContext, relations: RelationFile,
                      limits: ResourceLimits = DEFAULT_LIMITS) -> RegularityReport:
    """(v_1, ..., v_h) is regular iff the quotient is finite and h equals the generator count.

    The ring has m * |G|/2 polynomial generators, the t_i and their
    conjugates. The quotient by a sequence of length h is finite only if
    h >= that count; with equality finiteness means the sequence is a
    system of parameters and hence regular. A v_i mapping to zero is a
    zero divisor, so such a sequence is never regular.

    Raises:
        HeightMismatch: If the file is for another (n, m).
        RelationFileError: If a v-image is unknown, or the file's table does
            not list m * |G|/2 generators of height at most m.
    """
    _check_context(ctx, relations)
    sequence = _known_images(relations)[:ctx.h]
    generator_count = ctx.m * ctx.half_order
    listed = polynomial_generators(relations, ctx.m)
    if len(listed) != generator_count:
        raise RelationFileError(
            f"file lists {len(listed)} generators of height at most {ctx.m}, "
            f"expected {generator_count}")
    zeros = [f"v{index}" for index, image in enumerate(sequence, start=1) if not image]
    images = [image for image in sequence if image]
    dimension = quotient_dim(IdealSpec.of(images), limits) if images else math.inf
    if len(sequence) != generator_count:
        reason = (f"sequence length {len(sequence)} differs from the "
                  f"{generator_count} polynomial generators")
        regular = False
    elif zeros:
        reason = f"zero image for {', '.join(zeros)}"
        regular = False
    elif dimension == math.inf:
        reason = "the quotient is infinite"
        regular = False
    else:
        reason = f"finite quotient of dimension {dimension}"
        regular = True
    logger.info("regularity n=%d m=%d: %s", ctx.n, ctx.m, reason)
    return RegularityReport(regular, len(sequence), generator_count, dimension, reason)


@dataclass(frozen=True)
class NilpotenceReport:
    """Which elements are nilpotent modulo the ideal, and whether the quotient is finite."""
    nilpotent: Dict[str, bool] = field(default_factory=dict)
    quotient_dimension: Union[int, float] = math.inf

    @property
    def all_nilpotent(self) -> bool:
        return all(self.nilpotent.values())

    @property
    def finite(self) -> bool:
        return self.quotient_dimension != math.inf

    def to_dict(self) -> dict:
        dimension = self.quotient_dimension
        return {
            "nilpotent": dict(self.nilpotent),
            "all_nilpotent": self.all_nilpotent,
            "quotient_dimension": "infinite" if dimension == math.inf else dimension,
            "finite": self.finite,
        }


def nilpotence_report(ctx: HeightContext, relations: RelationFile,
                      elements: Optional[Sequence[str]] = None,
                      limits: ResourceLimits = DEFAULT_LIMITS) -> NilpotenceReport:
    """Decide nilpotence of t-generators modulo the theorem ideal.

    Args:
        ctx: The height context matching the file.
        relations: v-images and extra relations.
        elements: Polynomials to test, as text; the t-generators of height
            at most m by default.
        limits: Resource caps.
    """
    ideal = theorem_ideal(ctx, relations)
    names = list(elements) if elements else polynomial_generators(relations, ctx.m)
    verdicts = {}
    for text in names:
        try:
            element = Polynomial.parse(relations.table, text)
        except PolynomialError:
            logger.warning("cannot test %r for nilpotence", text)
            raise
        verdicts[text] = is_nilpotent(element, ideal, limits)
    return NilpotenceReport(verdicts, quotient_dim(ideal, limits))

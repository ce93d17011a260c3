"""
Milnor generators of the dual Steenrod algebra and their conjugates.

With halved degrees |xi_i| = 2^i - 1. The conjugates zeta_k satisfy
sum_{i+j=k} xi_i^(2^j) zeta_j = 0 with xi_0 = zeta_0 = 1, which over F2 reads
zeta_k = sum_{i=1}^{k} xi_i^(2^(k-i)) zeta_{k-i}.
"""
from typing import List, Sequence

from ..errors import InvalidInput
from ..logging_config import get_logger
from .f2poly import GeneratorTable, Polynomial, RelationFile
from .groebner import IdealSpec

logger = get_logger("steenrod")

PRESENTATION_NOTE = (
    "Presentation F2[xi_1..xi_m]/(zeta_{m+1}, ..., zeta_{2m}) of the quotient "
    "pi^e_* BP^((C4))<m>/(2, v_1, ..., v_{2m}) as a sub-Hopf-algebra quotient "
    "of the dual Steenrod algebra."
)


def milnor_table(m: int) -> GeneratorTable:
    """xi1..xim with degrees 2^i - 1."""
    if m < 1:
        raise InvalidInput(f"m must be positive, got {m}")
    return GeneratorTable(tuple(f"xi{i}" for i in range(1, m + 1)),
                          tuple((1 << i) - 1 for i in range(1, m + 1)))


def milnor_conjugates(xis: Sequence[Polynomial], count: int) -> List[Polynomial]:
    """zeta_1..zeta_count from xi_1..xi_len(xis); xi_k = 0 beyond the sequence.

    All polynomials share the table of xis[0].
    """
    if not xis:
        raise InvalidInput("need at least one xi")
    table = xis[0].table
    zetas = [Polynomial.constant(table)]
    for k in range(1, count + 1):
        zeta = Polynomial.zero(table)
        for i in range(1, min(k, len(xis)) + 1):
            zeta = zeta + (xis[i - 1] ** (1 << (k - i))) * zetas[k - i]
        zetas.append(zeta)
    return zetas[1:]


def steenrod_conjugates(m: int) -> List[Polynomial]:
    """zeta_1 .. zeta_{2m} in F2[xi_1, ..., xi_m]."""
    table = milnor_table(m)
    xis = [Polynomial.variable(table, name) for name in table.names]
    zetas = milnor_conjugates(xis, 2 * m)
    logger.debug("computed %d conjugates for m=%d", len(zetas), m)
    return zetas


def c4_mod2_presentation(m: int) -> IdealSpec:
    """The ideal (zeta_{m+1}, ..., zeta_{2m}) of F2[xi_1, ..., xi_m]."""
    zetas = steenrod_conjugates(m)
    return IdealSpec.of(zetas[m:])


def c4_table(m: int) -> GeneratorTable:
    """t_i and gamma t_i for i <= m, with gamma^2 t_i = -t_i."""
    if m < 1:
        raise InvalidInput(f"m must be positive, got {m}")
    names, degrees, action = [], [], []
    for i in range(1, m + 1):
        base = len(names)
        names += [f"t{i}", f"gt{i}"]
        degrees += [(1 << i) - 1] * 2
        action += [(base + 1, 1), (base, -1)]
    return GeneratorTable(tuple(names), tuple(degrees), tuple(action))


def c4_relation_file(m: int) -> RelationFile:
    """Relation data for C4 read off the Steenrod presentation.

    v_i maps to t_i + gamma t_i for i <= m, which identifies gamma t_i with t_i
    mod 2; v_{m+i} maps to zeta_{m+i}(t_1, ..., t_m).
    """
    table = c4_table(m)
    ts = [Polynomial.variable(table, f"t{i}") for i in range(1, m + 1)]
    images = [ts[i - 1] + Polynomial.variable(table, f"gt{i}") for i in range(1, m + 1)]
    images += milnor_conjugates(ts, 2 * m)[m:]
    return RelationFile(
        group_n=2, m=m, table=table, v_images=tuple(images),
        provenance=(
            PRESENTATION_NOTE,
            "v_i -> t_i + gt_i for i <= m and v_{m+i} -> zeta_{m+i}(t_1, ..., t_m); "
            "these images agree with the true ones modulo the ideal, not term by term.",
        ),
    )


def c2_table(m: int) -> GeneratorTable:
    if m < 1:
        raise InvalidInput(f"m must be positive, got {m}")
    return GeneratorTable(tuple(f"t{i}" for i in range(1, m + 1)),
                          tuple((1 << i) - 1 for i in range(1, m + 1)),
                          tuple((i, -1) for i in range(m)))


def c2_relation_file(m: int) -> RelationFile:
    """For C2, t_i = v_i modulo (2, v_1, ..., v_{i-1}); record v_i -> t_i."""
    table = c2_table(m)
    images = tuple(Polynomial.variable(table, name) for name in table.names)
    return RelationFile(
        group_n=1, m=m, table=table, v_images=images,
        provenance=("For G = C2, t_i is congruent to v_i modulo (2, v_1, ..., v_{i-1}).",),
    )


def c4_fragments_sample() -> RelationFile:
    """The quoted relation gamma t_1 * t_1^2 = 0 for C4 at m = 1; v-images unknown."""
    table = c4_table(1)
    relation = Polynomial.parse(table, "gt1*t1**2")
    return RelationFile(
        group_n=2, m=1, table=table, v_images=(None, None),
        extra_relations=(relation,),
        provenance=(
            "Only the displayed fragment gamma t_m * t_m^(2m) = 0 (m = 1) is recorded.",
            "The images of v_1 and v_2 are not reproduced and are marked unknown.",
        ),
    )

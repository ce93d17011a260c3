"""
Property checks: sweeps over small groups and truncations, Groebner bases
against sympy, and quotient dimensions against brute-force linear algebra.
"""
import itertools
import random
import unittest


def _xyz_table():
    from eoalg.services.f2poly import GeneratorTable

    return GeneratorTable(("x", "y", "z"), (1, 1, 1))


def _random_polynomial(rng, table, max_degree=3, max_terms=4):
    from eoalg.services.f2poly import Polynomial

    monomials = [m for m in itertools.product(range(max_degree + 1), repeat=table.arity)
                 if 0 < sum(m) <= max_degree]
    chosen = rng.sample(monomials, rng.randint(1, max_terms))
    if rng.random() < 0.3:
        chosen.append((0,) * table.arity)
    return Polynomial(table, {m: 1 for m in chosen})


def _brute_force_dimension(generators, bounds):
    """dim F2[x]/I by elimination inside the box prod [0, bounds[i]).

    The generators must include x_i^bounds[i], so every monomial outside the
    box lies in I and the quotient is spanned by the box.
    """
    box = list(itertools.product(*(range(b) for b in bounds)))
    position = {monomial: index for index, monomial in enumerate(box)}
    pivots = {}
    for generator in generators:
        for shift in box:
            row = 0
            for exponents in generator.terms:
                index = position.get(tuple(a + b for a, b in zip(exponents, shift)))
                if index is not None:
                    row ^= 1 << index
            while row:
                top = row.bit_length() - 1
                if top not in pivots:
                    pivots[top] = row
                    break
                row ^= pivots[top]
    return len(box) - len(pivots)


class TestMarkingProperties(unittest.TestCase):

    def test_burnside_agrees_with_enumeration(self):
        from eoalg.services.cyclic2 import CyclicGroup, burnside_orbit_count, orbit_decompose

        for n in range(1, 6):
            with self.subTest(n=n):
                group = CyclicGroup(n)
                self.assertEqual(len(orbit_decompose(group)), burnside_orbit_count(group))

    def test_orbit_invariants(self):
        from eoalg.services.cyclic2 import CyclicGroup, orbit_decompose

        for n in range(1, 5):
            group = CyclicGroup(n)
            for orbit in orbit_decompose(group):
                with self.subTest(n=n, marking=str(orbit.representative)):
                    self.assertEqual(orbit.orbit_size * orbit.stabilizer_order, group.order)
                    self.assertGreaterEqual(orbit.stabilizer_exponent, 1)
                    self.assertEqual(orbit.n_f * orbit.stabilizer_order, 2 * orbit.grading)

    def test_normal_form_is_translation_invariant(self):
        from eoalg.services.koszul import VariableOrbit, conjugation_normal_form

        rng = random.Random(11)
        for n in range(1, 5):
            modulus = 1 << (n - 1)
            for _ in range(10):
                offsets = tuple(rng.sample(range(modulus), rng.randint(1, modulus)))
                shift = rng.randrange(modulus)
                shifted = tuple((offset + shift) % modulus for offset in offsets)
                with self.subTest(n=n, offsets=offsets, shift=shift):
                    self.assertEqual(
                        conjugation_normal_form(n, (VariableOrbit("x", offsets, 1),)),
                        conjugation_normal_form(n, (VariableOrbit("x", shifted, 1),)))

    def test_layers_follow_orbit_gradings(self):
        """Test one summand per orbit in each grading, with gradings 0, 1, ..., 2^(n-1)."""
        from collections import Counter

        from eoalg.services.cyclic2 import CyclicGroup, orbit_decompose
        from eoalg.services.koszul import associated_graded

        for n in range(1, 5):
            for k_deg in (1, 3):
                with self.subTest(n=n, k_deg=k_deg):
                    table = associated_graded(n, k_deg)
                    per_grading = Counter(o.grading for o in orbit_decompose(CyclicGroup(n)))
                    self.assertEqual({g: len(row) for g, row in table.items()},
                                     dict(per_grading))
                    gradings = sorted(table)
                    steps = [b - a for a, b in zip(gradings, gradings[1:])]
                    self.assertEqual(gradings[0], 0)
                    self.assertTrue(all(step == 1 for step in steps))
                    self.assertEqual(sum(steps), 1 << (n - 1))

    def test_normalize_layers_is_idempotent(self):
        from eoalg.services.koszul import VariableOrbit, associated_graded, normalize_layers

        for n in range(1, 5):
            for coned in ((), (VariableOrbit("y", (0,), n),)):
                with self.subTest(n=n, coned=coned):
                    once = normalize_layers(associated_graded(n, 1, coned=coned))
                    self.assertEqual(normalize_layers(once), once)


class TestSeriesProperties(unittest.TestCase):

    def test_gaussian_binomials_are_odd(self):
        from eoalg.services.hilbert import gaussian_binomial

        for N in range(13):
            for M in range(N + 1):
                with self.subTest(N=N, M=M):
                    self.assertEqual(gaussian_binomial(N, M) % 2, 1)

    def test_series_sweep(self):
        """Test exact division, symmetry, degree and f(1) for n <= 3, m <= 3."""
        from eoalg.services.hilbert import (
            HeightContext,
            factored_series,
            gaussian_product,
            poincare_series,
        )

        for n in range(1, 4):
            for m in range(4):
                with self.subTest(n=n, m=m):
                    ctx = HeightContext(n, m)
                    series = poincare_series(ctx)
                    self.assertTrue(series.is_nonnegative())
                    self.assertEqual(series.degree, ctx.series_degree())
                    self.assertEqual(series.coefficients, tuple(reversed(series.coefficients)))
                    self.assertEqual(series.value_at_one(), gaussian_product(ctx))
                    self.assertEqual(series.value_at_one() % 2, 1)
                    self.assertEqual(factored_series(ctx).value_at_one(), series.value_at_one())

    def test_factored_dimension_for_large_contexts(self):
        from eoalg.services.hilbert import HeightContext, factored_series, gaussian_product

        for n, m in [(4, 3), (4, 4), (5, 2)]:
            with self.subTest(n=n, m=m):
                ctx = HeightContext(n, m)
                factored = factored_series(ctx)
                self.assertTrue(factored.is_polynomial)
                self.assertEqual(factored.value_at_one(), gaussian_product(ctx))
                self.assertEqual(factored.value_at_one() % 2, 1)

    def test_staircase_matches_series(self):
        """Test the Steenrod presentation against the Poincare series of C4."""
        from eoalg.services.groebner import staircase_series
        from eoalg.services.hilbert import HeightContext, poincare_series
        from eoalg.services.steenrod import c4_mod2_presentation

        for m in (1, 2):
            with self.subTest(m=m):
                self.assertEqual(staircase_series(c4_mod2_presentation(m)),
                                 poincare_series(HeightContext(2, m)))


class TestGroebnerProperties(unittest.TestCase):

    FIXED_IDEALS = [
        ["x**2 + y", "x*y + z", "z**2 + x"],
        ["x*y + 1", "y*z + x", "x**3 + z"],
        ["x**2*y + z**2", "x*z + y**2", "y**3"],
        ["x + y + z", "x*y + y*z + z*x", "x*y*z"],
    ]

    def _ideals(self, random_count=8):
        from eoalg.services.f2poly import Polynomial

        table = _xyz_table()
        ideals = [[Polynomial.parse(table, text) for text in texts]
                  for texts in self.FIXED_IDEALS]
        rng = random.Random(2024)
        for _ in range(random_count):
            ideals.append([_random_polynomial(rng, table) for _ in range(rng.randint(2, 3))])
        return table, ideals

    def test_reduced_basis_matches_sympy(self):
        import sympy

        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, groebner

        table, ideals = self._ideals()
        symbols = table.symbols()
        for index, generators in enumerate(ideals):
            with self.subTest(ideal=index):
                ours = groebner(IdealSpec.of(generators, order_name="grevlex"))
                reference = sympy.groebner([g.to_sympy() for g in generators], *symbols,
                                           modulus=2, order="grevlex")
                theirs = {Polynomial.from_sympy(table, expr, 2) for expr in reference.exprs}
                self.assertEqual(set(ours), theirs)

    def test_basis_ignores_generator_order(self):
        from eoalg.services.groebner import IdealSpec, groebner

        _, ideals = self._ideals(random_count=96)
        self.assertEqual(len(ideals), 100)
        rng = random.Random(5)
        for index, generators in enumerate(ideals):
            shuffled = list(generators)
            rng.shuffle(shuffled)
            with self.subTest(ideal=index):
                self.assertEqual(groebner(IdealSpec.of(generators)),
                                 groebner(IdealSpec.of(shuffled)))

    def test_reduced_basis_is_a_fixed_point(self):
        from eoalg.services.groebner import IdealSpec, groebner

        _, ideals = self._ideals(random_count=30)
        for index, generators in enumerate(ideals):
            basis = groebner(IdealSpec.of(generators))
            with self.subTest(ideal=index):
                self.assertEqual(groebner(IdealSpec.of(basis)), basis)

    def test_division_re_expands(self):
        from sympy.polys.monomials import monomial_divides

        from eoalg.services.f2poly import Polynomial, monomial_order
        from eoalg.services.groebner import divide

        table = _xyz_table()
        order = monomial_order(table)
        rng = random.Random(77)
        for index in range(50):
            p = _random_polynomial(rng, table, max_degree=5, max_terms=8)
            divisors = [_random_polynomial(rng, table) for _ in range(rng.randint(1, 3))]
            quotients, remainder = divide(p, divisors, order)
            total = remainder
            for quotient, divisor in zip(quotients, divisors):
                total = total + quotient * divisor
            leads = [d.leading_monomial(order) for d in divisors if d]
            with self.subTest(instance=index):
                self.assertEqual(len(quotients), len(divisors))
                self.assertEqual(total, p)
                for term in remainder.terms:
                    self.assertFalse(any(monomial_divides(lead, term) for lead in leads))
        self.assertEqual(divide(Polynomial.zero(table), divisors, order)[1],
                         Polynomial.zero(table))

    def test_generators_reduce_to_zero(self):
        from eoalg.services.groebner import IdealSpec, groebner, normal_form

        _, ideals = self._ideals()
        for index, generators in enumerate(ideals):
            ideal = IdealSpec.of(generators)
            basis = groebner(ideal)
            for generator in generators:
                with self.subTest(ideal=index, generator=str(generator)):
                    self.assertTrue(normal_form(generator, basis, ideal.order).is_zero())

    def test_dimension_matches_brute_force(self):
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, quotient_dim

        table = _xyz_table()
        cases = [
            ((3, 3, 2), ["x*y + z"]),
            ((2, 4, 3), ["x*z + y**2", "y*z"]),
            ((4, 4, 2), ["x**2 + y*z", "x*y**2 + x**3"]),
            ((3, 3, 3), ["x + y + z"]),
            ((2, 2, 2), ["x*y*z + 1"]),
            ((4, 2, 4), ["x*z", "x**2 + z**2 + y"]),
        ]
        cases = [(bounds, [Polynomial.parse(table, text) for text in extra])
                 for bounds, extra in cases]
        rng = random.Random(31)
        for index in range(24):
            bounds = tuple(rng.randint(2, 4) for _ in range(3))
            extra = [_random_polynomial(rng, table) for _ in range(rng.randint(1, 2))]
            cases.append((bounds, extra))
        for bounds, extra in cases:
            powers = [Polynomial.monomial(table, tuple(b if i == j else 0 for j in range(3)))
                      for i, b in enumerate(bounds)]
            generators = powers + extra
            with self.subTest(bounds=bounds, extra=[str(p) for p in extra]):
                self.assertEqual(quotient_dim(IdealSpec.of(generators)),
                                 _brute_force_dimension(generators, bounds))


class TestK0Properties(unittest.TestCase):

    def test_cell_sum_matches_closed_form(self):
        from eoalg.services.koszul import Suspension
        from eoalg.services.kzero import K0Atom, normalize, raw_suspension_sum, suspend_fixed_points

        for n in range(5):
            for s in range(1, 7):
                with self.subTest(n=n, s=s):
                    closed = suspend_fixed_points(
                        K0Atom("X", n, n, suspension=(Suspension(s, n),)))
                    self.assertEqual(normalize(raw_suspension_sum(n, s)), closed)

    def test_normalize_is_idempotent_and_linear(self):
        from eoalg.services.kzero import normalize, raw_suspension_sum

        sums = [raw_suspension_sum(n, s) for n in range(4) for s in (1, 2, 3)]
        rng = random.Random(3)
        for index, expr in enumerate(sums):
            other = rng.choice(sums)
            factor = rng.choice([-3, -1, 2, 5])
            with self.subTest(index=index):
                once = normalize(expr)
                self.assertEqual(normalize(once), once)
                self.assertEqual(normalize(expr + other), once + normalize(other))
                self.assertEqual(normalize(expr * factor), once * factor)
                self.assertTrue(normalize(expr - expr).is_zero())

    def test_quotient_relations_balance_and_replay(self):
        from eoalg.services.kzero import euler_balance, quotient_relation, replay, unreduced_atoms

        for n in range(1, 5):
            for k_deg in (1, 3):
                with self.subTest(n=n, k_deg=k_deg):
                    relation = quotient_relation(n, k_deg)
                    self.assertEqual(euler_balance(relation), (2, 2))
                    self.assertEqual(unreduced_atoms(relation.lhs - relation.rhs), [])
                    self.assertTrue(replay(relation).same_statement(relation))

    def test_height_drop_sweep(self):
        from eoalg.services.kzero import K0Expression, derive_height_drop, plain_atom, replay

        for n in range(1, 5):
            relations = derive_height_drop(n)
            for k, relation in enumerate(relations):
                with self.subTest(n=n, k=k):
                    self.assertEqual(relation.lhs,
                                     K0Expression.atom(plain_atom("M", n, k), 1 << k))
                    self.assertEqual(relation.rhs, K0Expression.atom(plain_atom("M", n, 0)))
                    self.assertTrue(replay(relation).same_statement(relation))


class TestMooreProperties(unittest.TestCase):

    def test_eo_and_bp_valuations_agree(self):
        """Test nu2(chi_eo) == nu2(chi_BP<h>), so the gate reads the same on both."""
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.moore import MooreShape, Status, euler_report, moore_gate, nu2

        pattern = [1, 2, 4, 3, 1, 8]
        for n in range(1, 4):
            for m in (1, 2):
                ctx = HeightContext(n, m)
                exponents = tuple(pattern[i % len(pattern)] for i in range(ctx.h + 1))
                shape = MooreShape(exponents)
                with self.subTest(n=n, m=m):
                    report = euler_report(ctx, shape)
                    self.assertEqual(report["chi_eo_nu2"], report["chi_bp_nu2"])
                    ruled_out = moore_gate(shape).status is Status.RULED_OUT
                    self.assertEqual(ruled_out, report["chi_eo_nu2"] <= nu2(ctx.h))

    def test_doubling_an_exponent_never_rules_out(self):
        from eoalg.services.moore import MooreShape, Status, moore_gate

        rng = random.Random(9)
        for index in range(200):
            exponents = [rng.randint(1, 12) for _ in range(rng.randint(2, 7))]
            position = rng.randrange(len(exponents))
            doubled = list(exponents)
            doubled[position] *= 2
            before = moore_gate(MooreShape(tuple(exponents)))
            after = moore_gate(MooreShape(tuple(doubled)))
            with self.subTest(index=index, exponents=exponents, position=position):
                self.assertEqual(after.witness.product_nu2, before.witness.product_nu2 + 1)
                if before.status is Status.NOT_RULED_OUT:
                    self.assertIs(after.status, Status.NOT_RULED_OUT)

    def test_gate_threshold(self):
        from eoalg.services.moore import MooreShape, Status, moore_gate, nu2

        for h in range(1, 9):
            for leading in (1, 2, 4, 8, 16):
                shape = MooreShape((leading,) + (1,) * h)
                with self.subTest(h=h, leading=leading):
                    expected = Status.RULED_OUT if nu2(leading) <= nu2(h) else Status.NOT_RULED_OUT
                    self.assertEqual(moore_gate(shape).status, expected)


if __name__ == "__main__":
    unittest.main()

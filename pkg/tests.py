import json
import math
import os
import tempfile
import unittest


class TestGroupNames(unittest.TestCase):
    """Tests for group-name parsing."""

    def test_valid_group_names(self):
        """Test that cyclic 2-group names parse to their exponents."""
        from eoalg.utils.group_names import parse_group

        cases = {"e": 0, "C1": 0, "C2": 1, "C4": 2, "C8": 3, "c16": 4}
        for name, exponent in cases.items():
            with self.subTest(name=name):
                self.assertEqual(parse_group(name), exponent)

    def test_invalid_group_names(self):
        """Test that names of other groups are rejected."""
        from eoalg.errors import GroupError, InvalidInput
        from eoalg.utils.group_names import is_valid_group_name, parse_group

        for name in ["", "C3", "C6", "D4", "C0", "C", "4"]:
            with self.subTest(name=name):
                self.assertFalse(is_valid_group_name(name))
                with self.assertRaises(GroupError):
                    parse_group(name)
        self.assertTrue(issubclass(GroupError, InvalidInput))

    def test_group_name_round_trip(self):
        from eoalg.utils.group_names import group_name, parse_group

        for exponent in range(6):
            with self.subTest(exponent=exponent):
                self.assertEqual(parse_group(group_name(exponent)), exponent)
        self.assertEqual(group_name(0), "e")
        self.assertEqual(group_name(3), "C8")

    def test_exponent_list(self):
        from eoalg.errors import InvalidInput
        from eoalg.utils.group_names import parse_exponent_list

        self.assertEqual(parse_exponent_list("1,4,32"), [1, 4, 32])
        self.assertEqual(parse_exponent_list(" 3 , 8 "), [3, 8])
        for bad in ["", "1,x", ","]:
            with self.subTest(text=bad):
                with self.assertRaises(InvalidInput):
                    parse_exponent_list(bad)


class TestConfig(unittest.TestCase):
    """Tests for resource limits."""

    def test_overrides_ignore_none(self):
        from eoalg.config import DEFAULT_LIMITS

        limits = DEFAULT_LIMITS.with_overrides(max_degree=40, workers=None)
        self.assertEqual(limits.max_degree, 40)
        self.assertEqual(limits.workers, DEFAULT_LIMITS.workers)
        self.assertEqual(DEFAULT_LIMITS.max_degree, 512)


class TestLogging(unittest.TestCase):
    """Tests for the logging configuration."""

    def test_json_formatter_includes_extra_fields(self):
        import io
        import logging

        from eoalg.logging_config import get_logger, log_with_extra, setup_logging

        stream = io.StringIO()
        setup_logging("INFO", "json", stream=stream)
        logger = get_logger("test")
        log_with_extra(logger, logging.WARNING, "cap hit", cap="max_degree", observed=7)
        record = json.loads(stream.getvalue().strip().splitlines()[-1])
        self.assertEqual(record["message"], "cap hit")
        self.assertEqual(record["level"], "WARNING")
        self.assertEqual(record["logger"], "eoalg.test")
        self.assertEqual(record["cap"], "max_degree")
        self.assertEqual(record["observed"], 7)
        setup_logging("WARNING", "text", stream=io.StringIO())

    def test_level_filtering(self):
        import io
        import logging

        from eoalg.logging_config import get_logger, log_with_extra, setup_logging

        stream = io.StringIO()
        setup_logging("ERROR", "text", stream=stream)
        log_with_extra(get_logger("test"), logging.INFO, "quiet", detail=1)
        get_logger("test").warning("also quiet")
        self.assertEqual(stream.getvalue(), "")


class TestCyclicMarkings(unittest.TestCase):
    """Tests for markings of cyclic 2-groups and their orbits."""

    def test_orbit_counts(self):
        """Test the orbit counts 2, 3, 6 for C2, C4, C8."""
        from eoalg.services.cyclic2 import CyclicGroup, orbit_decompose

        for n, expected in [(1, 2), (2, 3), (3, 6)]:
            with self.subTest(n=n):
                self.assertEqual(len(orbit_decompose(CyclicGroup(n))), expected)

    def test_marking_count(self):
        from eoalg.services.cyclic2 import CyclicGroup, enumerate_markings

        for n in range(1, 5):
            with self.subTest(n=n):
                self.assertEqual(len(enumerate_markings(CyclicGroup(n))), 2 ** (2 ** (n - 1)))

    def test_orbit_data_for_c8(self):
        """Test stabilizers, gradings and n_f of the six C8 orbits."""
        from eoalg.services.cyclic2 import CyclicGroup, orbit_decompose

        rows = [(str(o.representative), o.grading, o.stabilizer_exponent, o.orbit_size, o.n_f)
                for o in orbit_decompose(CyclicGroup(3))]
        self.assertEqual(rows, [
            ("0000", 0, 3, 1, 0),
            ("0001", 1, 1, 4, 1),
            ("0101", 2, 2, 2, 1),
            ("0011", 2, 1, 4, 2),
            ("0111", 3, 1, 4, 3),
            ("1111", 4, 3, 1, 1),
        ])

    def test_orbit_sizes_sum_to_marking_count(self):
        from eoalg.services.cyclic2 import CyclicGroup, orbit_decompose

        for n in range(1, 5):
            with self.subTest(n=n):
                orbits = orbit_decompose(CyclicGroup(n))
                self.assertEqual(sum(o.orbit_size for o in orbits), 2 ** (2 ** (n - 1)))

    def test_trivial_group_has_no_markings(self):
        from eoalg.errors import GroupError
        from eoalg.services.cyclic2 import CyclicGroup, orbit_decompose

        with self.assertRaises(GroupError):
            orbit_decompose(CyclicGroup(0))
        with self.assertRaises(GroupError):
            CyclicGroup(-1)

    def test_marking_enumeration_is_capped(self):
        from eoalg.config import DEFAULT_LIMITS
        from eoalg.errors import ResourceLimitExceeded
        from eoalg.services.cyclic2 import CyclicGroup, enumerate_markings, orbit_decompose

        with self.assertRaises(ResourceLimitExceeded) as caught:
            orbit_decompose(CyclicGroup(64))
        self.assertEqual(caught.exception.cap, "max_group_exponent")
        self.assertEqual(caught.exception.observed, 64)
        tight = DEFAULT_LIMITS.with_overrides(max_group_exponent=2)
        with self.assertRaises(ResourceLimitExceeded):
            enumerate_markings(CyclicGroup(3), tight)
        self.assertEqual(len(orbit_decompose(CyclicGroup(2), tight)), 3)

    def test_subgroup_chain(self):
        from eoalg.services.cyclic2 import CyclicGroup, subgroups

        for n, expected in [(0, [0]), (2, [0, 1, 2]), (3, [0, 1, 2, 3])]:
            with self.subTest(n=n):
                self.assertEqual(subgroups(CyclicGroup(n)), expected)

    def test_burnside_counts_binary_necklaces(self):
        from eoalg.services.cyclic2 import CyclicGroup, burnside_orbit_count

        for n, expected in [(1, 2), (2, 3), (3, 6), (4, 36), (5, 4116)]:
            with self.subTest(n=n):
                self.assertEqual(burnside_orbit_count(CyclicGroup(n)), expected)


class TestKoszulFiltration(unittest.TestCase):
    """Tests for the associated graded of the Koszul filtration."""

    def test_c4_layers(self):
        """Test the three layers for C4."""
        from eoalg.services.koszul import associated_graded, layer_rows

        table = associated_graded(2, 1)
        self.assertEqual(sorted(table), [0, 1, 2])
        summands = [row["summand"] for row in layer_rows(table)]
        self.assertEqual(summands, [
            "M/(C4.x)",
            "Ind_C2^C4 S^(1rho_C2) M/(x)",
            "S^(1rho_C4) M",
        ])

    def test_c8_layers(self):
        """Test five gradings and six summands for C8, two at grading 2."""
        from eoalg.services.koszul import associated_graded, normalize_layers

        table = normalize_layers(associated_graded(3, 1))
        self.assertEqual(sorted(table), [0, 1, 2, 3, 4])
        self.assertEqual(sum(len(row) for row in table.values()), 6)
        self.assertEqual(len(table[2]), 2)
        rendered = [summand.render() for summand in table[2]]
        self.assertEqual(rendered, [
            "Ind_C4^C8 S^(1rho_C4) M/(C4.x)",
            "Ind_C2^C8 S^(2rho_C2) M/(x, gx)",
        ])
        self.assertEqual(table[3][0].render(), "Ind_C2^C8 S^(3rho_C2) M/(x)")
        self.assertEqual(table[0][0].render(), "M/(C8.x)")
        self.assertEqual(table[4][0].render(), "S^(1rho_C8) M")

    def test_kdeg_scales_suspensions(self):
        from eoalg.services.koszul import associated_graded

        table = associated_graded(2, 3)
        self.assertEqual(table[1][0].suspension.multiplier, 3)
        self.assertEqual(table[2][0].suspension.multiplier, 3)

    def test_invalid_inputs(self):
        from eoalg.errors import GroupError, InvalidInput
        from eoalg.services.koszul import associated_graded

        with self.assertRaises(GroupError):
            associated_graded(0, 1)
        with self.assertRaises(InvalidInput):
            associated_graded(2, 0)

    def test_restrict_quotient(self):
        """Test that restricting C4.x to C2 gives x, gx and to e gives x, gx."""
        from eoalg.errors import GroupError
        from eoalg.services.koszul import QuotientDescriptor, VariableOrbit, restrict_quotient

        desc = QuotientDescriptor(2, 2, (VariableOrbit("x", (0,), 2),))
        self.assertEqual(str(desc), "M/(C4.x)")
        self.assertEqual(str(restrict_quotient(desc, 1)), "M/(x, gx)")
        self.assertEqual(str(restrict_quotient(desc, 0)), "M/(x, gx)")
        with self.assertRaises(GroupError):
            restrict_quotient(restrict_quotient(desc, 1), 2)
        with self.assertRaises(GroupError):
            restrict_quotient(desc, 3)

    def test_conjugation_normal_form(self):
        from eoalg.services.koszul import VariableOrbit, conjugation_normal_form

        shifted = (VariableOrbit("x", (1, 3), 0),)
        self.assertEqual(conjugation_normal_form(3, shifted), (VariableOrbit("x", (0, 2), 0),))
        split = (VariableOrbit("x", (2,), 0), VariableOrbit("x", (3,), 0))
        self.assertEqual(conjugation_normal_form(3, split), (VariableOrbit("x", (0, 1), 0),))

    def test_repeated_offsets_rejected(self):
        from eoalg.errors import InvalidInput
        from eoalg.services.koszul import VariableOrbit

        with self.assertRaises(InvalidInput):
            VariableOrbit("x", (1, 1), 0)


class TestF2Polynomials(unittest.TestCase):
    """Tests for generator tables and polynomials."""

    def _table(self):
        from eoalg.services.f2poly import GeneratorTable

        return GeneratorTable(("t1", "gt1"), (1, 1), ((1, 1), (0, -1)))

    def test_parse_and_arithmetic(self):
        from eoalg.services.f2poly import Polynomial

        table = self._table()
        p = Polynomial.parse(table, "t1 + gt1")
        square = p * p
        self.assertEqual(square, Polynomial.parse(table, "t1**2 + gt1**2"))
        self.assertEqual(p + p, Polynomial.zero(table))
        self.assertEqual(Polynomial.parse(table, "t1^3"), Polynomial.parse(table, "t1**3"))
        self.assertEqual(str(Polynomial.parse(table, "3*t1")), "t1")

    def test_degrees(self):
        from eoalg.services.f2poly import GeneratorTable, Polynomial

        table = GeneratorTable(("t1", "t2"), (1, 3))
        p = Polynomial.parse(table, "t1**3 + t2")
        self.assertTrue(p.is_homogeneous())
        self.assertEqual(p.degree, 3)
        self.assertFalse(Polynomial.parse(table, "t1 + t2").is_homogeneous())
        self.assertEqual(Polynomial.zero(table).degree, -1)

    def test_action(self):
        """Test that gamma maps t1 to gt1 and gt1 to -t1, with order 4 over Z."""
        from eoalg.services.f2poly import Polynomial

        table = self._table()
        t1 = Polynomial.variable(table, "t1", characteristic=0)
        gt1 = Polynomial.variable(table, "gt1", characteristic=0)
        self.assertEqual(t1.act(), gt1)
        self.assertEqual(t1.act(2), -t1)
        self.assertEqual(t1.act(4), t1)
        self.assertEqual(table.action_order(), 4)
        self.assertTrue(table.is_action_of(2))
        self.assertFalse(table.is_action_of(1))
        self.assertEqual(table.orbit("t1"), ["t1", "gt1"])

    def test_parse_errors(self):
        from eoalg.errors import PolynomialError
        from eoalg.services.f2poly import Polynomial

        table = self._table()
        for text in ["t1 + y", "t1 / gt1", "t1 +", "", "   ", "1.5*t1"]:
            with self.subTest(text=text):
                with self.assertRaises(PolynomialError):
                    Polynomial.parse(table, text)

    def test_parse_never_evaluates_code(self):
        """Test that text outside the polynomial grammar is rejected before parsing."""
        from eoalg.errors import PolynomialError
        from eoalg.services.f2poly import Polynomial

        table = self._table()
        with tempfile.TemporaryDirectory() as directory:
            marker = os.path.join(directory, "marker")
            attempts = [
                f"__import__('pathlib').Path({marker!r}).touch() or t1",
                "t1.__class__",
                "exec('1') + t1",
                "[t1][0]",
                "lambda: t1",
                "t1; gt1",
            ]
            for text in attempts:
                with self.subTest(text=text):
                    with self.assertRaises(PolynomialError):
                        Polynomial.parse(table, text)
            self.assertFalse(os.path.exists(marker))

    def test_keyword_generator_names_rejected(self):
        from eoalg.errors import PolynomialError
        from eoalg.services.f2poly import GeneratorTable

        for name in ["lambda", "import", "None"]:
            with self.subTest(name=name):
                with self.assertRaises(PolynomialError):
                    GeneratorTable((name,), (1,))

    def test_table_validation(self):
        from eoalg.errors import PolynomialError
        from eoalg.services.f2poly import GeneratorTable

        bad_tables = [
            (("t1", "t1"), (1, 1), ()),
            (("t1", "t2"), (1, 3), ((1, 1), (0, 1))),
            (("t1",), (0,), ()),
            (("t 1",), (1,), ()),
            (("t1",), (1,), ((0, 2),)),
        ]
        for names, degrees, action in bad_tables:
            with self.subTest(names=names, action=action):
                with self.assertRaises(PolynomialError):
                    GeneratorTable(names, degrees, action)

    def test_substitute_and_term_list(self):
        from eoalg.services.f2poly import GeneratorTable, Polynomial

        table = GeneratorTable(("a", "b"), (1, 1))
        p = Polynomial.parse(table, "a*b + b**2")
        images = [Polynomial.parse(table, "a + b"), Polynomial.parse(table, "b")]
        self.assertEqual(p.substitute(images), Polynomial.parse(table, "a*b"))
        rebuilt = Polynomial.from_term_list(table, p.to_term_list())
        self.assertEqual(rebuilt, p)

    def test_weighted_order(self):
        from eoalg.services.f2poly import GeneratorTable, Polynomial, monomial_order

        table = GeneratorTable(("t1", "t2"), (1, 3))
        order = monomial_order(table)
        p = Polynomial.parse(table, "t1**2 + t2")
        self.assertEqual(p.leading_monomial(order), (0, 1))
        self.assertEqual(p.leading_monomial(monomial_order(table, "grevlex")), (2, 0))

    def test_relation_file_degree_check(self):
        from eoalg.errors import PolynomialError
        from eoalg.services.f2poly import GeneratorTable, Polynomial, RelationFile

        table = GeneratorTable(("t1", "t2"), (1, 3))
        with self.assertRaises(PolynomialError):
            RelationFile(1, 2, table, (Polynomial.parse(table, "t1"),
                                       Polynomial.parse(table, "t1**2")))

    def test_generator_height(self):
        from eoalg.services.f2poly import generator_height

        self.assertEqual([generator_height(d) for d in (1, 3, 7, 15, 2, 5)],
                         [1, 2, 3, 4, None, None])


class TestGroebner(unittest.TestCase):
    """Tests for Buchberger's algorithm and ideal queries."""

    def _table(self, names=("x", "y")):
        from eoalg.services.f2poly import GeneratorTable

        return GeneratorTable(tuple(names), (1,) * len(names))

    def test_reduced_basis(self):
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, groebner

        table = self._table()
        ideal = IdealSpec.of([Polynomial.parse(table, "x + y"), Polynomial.parse(table, "y")])
        basis = groebner(ideal)
        self.assertEqual(set(basis), {Polynomial.parse(table, "x"), Polynomial.parse(table, "y")})

    def test_reduced_basis_with_s_pairs(self):
        """Test (x^2 + y, x*y) over F2, whose reduced basis is {x^2 + y, x*y, y^2}."""
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, groebner

        table = self._table()
        ideal = IdealSpec.of([Polynomial.parse(table, "x**2 + y"),
                              Polynomial.parse(table, "x*y")], order_name="grevlex")
        expected = {Polynomial.parse(table, text) for text in ("x**2 + y", "x*y", "y**2")}
        self.assertEqual(set(groebner(ideal)), expected)

    def test_membership(self):
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, in_ideal

        table = self._table()
        ideal = IdealSpec.of([Polynomial.parse(table, "x")])
        self.assertTrue(in_ideal(Polynomial.parse(table, "x*y + x**3"), ideal))
        self.assertFalse(in_ideal(Polynomial.parse(table, "y"), ideal))

    def test_unit_ideal(self):
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, contains_one, groebner, quotient_dim

        table = self._table()
        ideal = IdealSpec.of([Polynomial.parse(table, "x"), Polynomial.parse(table, "x + 1")])
        self.assertTrue(contains_one(groebner(ideal)))
        self.assertEqual(quotient_dim(ideal), 0)

    def test_divide(self):
        from eoalg.services.f2poly import Polynomial, monomial_order
        from eoalg.services.groebner import divide

        table = self._table()
        order = monomial_order(table)
        p = Polynomial.parse(table, "x**2 + x*y + y")
        quotients, remainder = divide(p, [Polynomial.parse(table, "x")], order)
        self.assertEqual(quotients, [Polynomial.parse(table, "x + y")])
        self.assertEqual(remainder, Polynomial.parse(table, "y"))

    def test_nilpotence(self):
        from eoalg.config import DEFAULT_LIMITS
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, is_nilpotent

        table = self._table()
        cube = IdealSpec.of([Polynomial.parse(table, "x**3")])
        x = Polynomial.parse(table, "x")
        self.assertTrue(is_nilpotent(x, cube))
        self.assertTrue(is_nilpotent(x, cube, DEFAULT_LIMITS.with_overrides(nilpotence_power_cap=1)))
        self.assertFalse(is_nilpotent(Polynomial.parse(table, "y"), cube))
        product = IdealSpec.of([Polynomial.parse(table, "x*y")])
        self.assertFalse(is_nilpotent(x, product))
        self.assertTrue(is_nilpotent(Polynomial.parse(table, "x*y"), product))

    def test_quotient_dimension(self):
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, quotient_dim

        table = self._table()
        finite = IdealSpec.of([Polynomial.parse(table, "x**2"), Polynomial.parse(table, "y**3")])
        self.assertEqual(quotient_dim(finite), 6)
        infinite = IdealSpec.of([Polynomial.parse(table, "x**2")])
        self.assertEqual(quotient_dim(infinite), math.inf)

    def test_basis_size_limit(self):
        from eoalg.config import DEFAULT_LIMITS
        from eoalg.errors import ResourceLimitExceeded
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, groebner

        table = self._table()
        ideal = IdealSpec.of([Polynomial.parse(table, "x"), Polynomial.parse(table, "y")])
        with self.assertRaises(ResourceLimitExceeded) as caught:
            groebner(ideal, DEFAULT_LIMITS.with_overrides(max_basis_size=1))
        self.assertEqual(caught.exception.cap, "max_basis_size")
        self.assertEqual(caught.exception.limit, 1)

    def test_degree_limit(self):
        from eoalg.config import DEFAULT_LIMITS
        from eoalg.errors import ResourceLimitExceeded
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec, groebner

        table = self._table()
        ideal = IdealSpec.of([Polynomial.parse(table, "x**5")])
        with self.assertRaises(ResourceLimitExceeded):
            groebner(ideal, DEFAULT_LIMITS.with_overrides(max_degree=4))

    def test_workers_give_same_basis(self):
        from eoalg.config import DEFAULT_LIMITS
        from eoalg.services.steenrod import c4_mod2_presentation
        from eoalg.services.groebner import groebner

        ideal = c4_mod2_presentation(2)
        serial = groebner(ideal)
        threaded = groebner(ideal, DEFAULT_LIMITS.with_overrides(workers=4))
        self.assertEqual(serial, threaded)

    def test_zero_ideal_rejected(self):
        from eoalg.errors import PolynomialError
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.groebner import IdealSpec

        table = self._table()
        with self.assertRaises(PolynomialError):
            IdealSpec.of([Polynomial.zero(table)])


class TestSteenrod(unittest.TestCase):
    """Tests for the conjugate Milnor generators."""

    def test_first_conjugates(self):
        from eoalg.services.f2poly import Polynomial
        from eoalg.services.steenrod import milnor_table, steenrod_conjugates

        table = milnor_table(2)
        zetas = steenrod_conjugates(2)
        expected = ["xi1", "xi1**3 + xi2", "xi1**7 + xi1*xi2**2 + xi1**4*xi2",
                    "xi1**15 + xi1**12*xi2 + xi1**9*xi2**2 + xi1**3*xi2**4 + xi2**5"]
        for index, text in enumerate(expected):
            with self.subTest(k=index + 1):
                self.assertEqual(zetas[index], Polynomial.parse(table, text))

    def test_presentation_dimensions(self):
        """Test F2[xi1]/(xi1^3) and the m = 2 quotient have dimensions 3 and 35."""
        from eoalg.services.groebner import quotient_dim
        from eoalg.services.steenrod import c4_mod2_presentation

        self.assertEqual(quotient_dim(c4_mod2_presentation(1)), 3)
        self.assertEqual(quotient_dim(c4_mod2_presentation(2)), 35)

    def test_conjugates_are_homogeneous(self):
        from eoalg.services.steenrod import steenrod_conjugates

        for k, zeta in enumerate(steenrod_conjugates(3), start=1):
            with self.subTest(k=k):
                self.assertTrue(zeta.is_homogeneous())
                self.assertEqual(zeta.degree, 2 ** k - 1)

    def test_relation_files(self):
        from eoalg.services.steenrod import c2_relation_file, c4_fragments_sample, c4_relation_file

        c4 = c4_relation_file(2)
        self.assertEqual(c4.h, 4)
        self.assertEqual(len(c4.v_images), 4)
        self.assertEqual(c2_relation_file(3).h, 3)
        self.assertTrue(c4_fragments_sample().has_unknown_images())

    def test_invalid_m(self):
        from eoalg.errors import InvalidInput
        from eoalg.services.steenrod import milnor_table

        with self.assertRaises(InvalidInput):
            milnor_table(0)


class TestHilbert(unittest.TestCase):
    """Tests for Poincare series and dimensions."""

    def test_dimensions(self):
        from eoalg.services.hilbert import HeightContext, dimension, gaussian_product

        for n, m, expected in [(2, 1, 3), (2, 2, 35), (3, 1, 315), (1, 3, 1), (2, 0, 1)]:
            with self.subTest(n=n, m=m):
                ctx = HeightContext(n, m)
                self.assertEqual(dimension(ctx), expected)
                self.assertEqual(gaussian_product(ctx), expected)

    def test_series_for_c4(self):
        from eoalg.services.hilbert import HeightContext, poincare_series

        series = poincare_series(HeightContext(2, 1))
        self.assertEqual(series.coefficients, (1, 1, 1))
        self.assertEqual(str(series), "1 + x + x^2")

    def test_c2_series_is_one(self):
        from eoalg.services.hilbert import HeightContext, IntPolynomial, poincare_series

        for m in range(5):
            with self.subTest(m=m):
                self.assertEqual(poincare_series(HeightContext(1, m)), IntPolynomial.one())

    def test_gaussian_binomials(self):
        from eoalg.services.hilbert import gaussian_binomial

        cases = [(4, 2, 35), (2, 1, 3), (3, 1, 7), (5, 0, 1), (5, 5, 1), (2, 3, 0), (6, 3, 1395)]
        for N, M, expected in cases:
            with self.subTest(N=N, M=M):
                self.assertEqual(gaussian_binomial(N, M), expected)

    def test_exact_division(self):
        from eoalg.errors import NonExactDivision
        from eoalg.services.hilbert import IntPolynomial

        square = IntPolynomial.one_minus_power(2)
        self.assertEqual(square.divide_one_minus_power(1).coefficients, (1, 1))
        with self.assertRaises(NonExactDivision):
            square.divide_one_minus_power(3)
        with self.assertRaises(NonExactDivision):
            IntPolynomial((1, 0, 1)).divide_one_minus_power(1)

    def test_dimension_report_rejects_bad_results(self):
        from unittest.mock import patch

        from eoalg.errors import NonExactDivision
        from eoalg.services.hilbert import HeightContext, dimension_report

        ctx = HeightContext(2, 2)
        self.assertEqual(dimension_report(ctx)["dimension"], 35)
        with patch("eoalg.services.hilbert.gaussian_product", return_value=33):
            with self.assertRaises(NonExactDivision) as caught:
                dimension_report(ctx)
        self.assertIn("disagrees", str(caught.exception))
        with patch("eoalg.services.hilbert.dimension", return_value=36), \
             patch("eoalg.services.hilbert.gaussian_product", return_value=36):
            with self.assertRaises(NonExactDivision) as caught:
                dimension_report(ctx)
        self.assertIn("is even", str(caught.exception))

    def test_factored_series_matches_dense(self):
        from eoalg.services.hilbert import HeightContext, factored_series, poincare_series

        for n, m in [(2, 1), (2, 2), (3, 1), (3, 2)]:
            with self.subTest(n=n, m=m):
                ctx = HeightContext(n, m)
                factored = factored_series(ctx)
                self.assertTrue(factored.is_polynomial)
                self.assertEqual(factored.expand(), poincare_series(ctx))
                self.assertEqual(factored.degree, ctx.series_degree())

    def test_series_cap(self):
        from eoalg.config import DEFAULT_LIMITS
        from eoalg.errors import ResourceLimitExceeded
        from eoalg.services.hilbert import HeightContext, dimension, poincare_series

        limits = DEFAULT_LIMITS.with_overrides(max_series_degree=10)
        ctx = HeightContext(3, 1)
        with self.assertRaises(ResourceLimitExceeded):
            poincare_series(ctx, limits)
        self.assertEqual(dimension(ctx, limits), 315)

    def test_binomial_table(self):
        from eoalg.services.hilbert import binomial_table

        self.assertEqual(binomial_table(2), [(2, 0, 1), (2, 1, 3), (2, 2, 1)])
        self.assertEqual(binomial_table(4, 2), [(4, 2, 35)])

    def test_invalid_context(self):
        from eoalg.errors import GroupError, InvalidInput
        from eoalg.services.hilbert import HeightContext

        with self.assertRaises(GroupError):
            HeightContext(0, 1)
        with self.assertRaises(InvalidInput):
            HeightContext(2, -1)


class TestKZero(unittest.TestCase):
    """Tests for formal K_0 relations."""

    def test_c2_relation(self):
        from eoalg.services.kzero import euler_balance, quotient_relation

        relation = quotient_relation(1, 1)
        self.assertEqual(str(relation), "2[M^C2] = [M^e] + [M/(x)^C2]")
        self.assertEqual(euler_balance(relation), (2, 2))

    def test_c4_relation(self):
        from eoalg.services.kzero import quotient_relation

        relation = quotient_relation(2, 1)
        self.assertEqual(str(relation),
                         "2[M^C4] = [M^C2] + [M/(C4.x)^C4] - [M/(x)^C2] + [M/(x)^e]")

    def test_c8_relation(self):
        from eoalg.services.kzero import euler_balance, plain_atom, quotient_relation

        relation = quotient_relation(3, 1)
        self.assertEqual(relation.lhs.coefficient(plain_atom("M", 3, 3)), 2)
        self.assertEqual(relation.rhs.coefficient(plain_atom("M", 3, 2)), 1)
        self.assertEqual(str(relation.lhs), "2[M^C8]")
        self.assertEqual({str(atom): coefficient for atom, coefficient in relation.rhs.items()}, {
            "[M^C4]": 1,
            "[M/(C8.x)^C8]": 1,
            "[M/(x, gx, g^2x)^e]": 1,
            "[M/(x, gx, g^2x)^C2]": -1,
            "[M/(x, g^2x)^C2]": 1,
            "[M/(C4.x)^C4]": -1,
            "[M/(x, gx)^C2]": 1,
            "[M/(x)^e]": 1,
            "[M/(x)^C2]": -1,
        })
        self.assertEqual(euler_balance(relation), (2, 2))
        self.assertEqual([step.rule for step in relation.trace],
                         ["filtration", "uninduce", "desuspend", "canonicalize", "collect"])

    def test_even_degree_rejected(self):
        from eoalg.errors import GroupError, InvalidInput
        from eoalg.services.kzero import quotient_relation

        with self.assertRaises(InvalidInput):
            quotient_relation(2, 2)
        with self.assertRaises(GroupError):
            quotient_relation(0, 1)

    def test_suspend_fixed_points(self):
        from eoalg.services.koszul import Suspension
        from eoalg.services.kzero import K0Atom, K0Expression, plain_atom, suspend_fixed_points

        odd = suspend_fixed_points(K0Atom("X", 2, 2, suspension=(Suspension(3, 2),)))
        self.assertEqual(odd, K0Expression.of((1, plain_atom("X", 2, 1)), (-1, plain_atom("X", 2, 2))))
        even = suspend_fixed_points(K0Atom("X", 2, 2, suspension=(Suspension(2, 2),)))
        self.assertEqual(even, K0Expression.atom(plain_atom("X", 2, 2)))
        trivial = suspend_fixed_points(K0Atom("X", 0, 0, suspension=(Suspension(1, 0),)))
        self.assertEqual(trivial, K0Expression.atom(plain_atom("X", 0, 0), -1))

    def test_suspension_mismatch(self):
        from eoalg.errors import GroupError
        from eoalg.services.koszul import Suspension
        from eoalg.services.kzero import K0Atom, suspend_fixed_points

        with self.assertRaises(GroupError):
            suspend_fixed_points(K0Atom("X", 2, 2, suspension=(Suspension(1, 1),)))

    def test_uninduce(self):
        from eoalg.services.kzero import K0Atom, K0Expression, plain_atom, uninduce_atom

        atom = K0Atom("M", 3, 1, induced_from=0)
        self.assertEqual(uninduce_atom(atom), K0Expression.atom(plain_atom("M", 3, 0), 4))

    def test_height_drop(self):
        """Test 2^k [M^{C_{2^k}}] == [M^e] modulo torsion for k <= 3."""
        from eoalg.services.kzero import K0Expression, derive_height_drop, plain_atom

        relations = derive_height_drop(3)
        self.assertEqual(len(relations), 4)
        base = K0Expression.atom(plain_atom("M", 3, 0))
        for k, relation in enumerate(relations):
            with self.subTest(k=k):
                self.assertTrue(relation.mod_torsion)
                self.assertEqual(relation.lhs, K0Expression.atom(plain_atom("M", 3, k), 2 ** k))
                self.assertEqual(relation.rhs, base)

    def test_height_drop_token(self):
        from eoalg.services.kzero import derive_height_drop

        relations = derive_height_drop(2, m=1)
        self.assertEqual(str(relations[-1]),
                         "4[BP((C4))<1>^C4] == [BP((C4))<1>^e]  (mod torsion)")

    def test_replay(self):
        from eoalg.services.kzero import derive_height_drop, quotient_relation, replay

        relations = [quotient_relation(3, 1)] + derive_height_drop(3)
        for relation in relations:
            with self.subTest(relation=str(relation)):
                self.assertTrue(replay(relation).same_statement(relation))

    def test_unknown_rule(self):
        from eoalg.errors import InvalidInput
        from eoalg.services.kzero import apply_rule, quotient_relation

        with self.assertRaises(InvalidInput):
            apply_rule(quotient_relation(1, 1), "telescope")
        with self.assertRaises(InvalidInput):
            apply_rule(None, "collect")

    def test_coned_quotient_relation(self):
        """Test the relation for N = M/(C4.y): every class carries the y-quotient."""
        from eoalg.services.koszul import VariableOrbit
        from eoalg.services.kzero import euler_balance, quotient_relation

        coned = (VariableOrbit("y", (0,), 2),)
        relation = quotient_relation(2, 1, coned=coned)
        for atom in relation.lhs.atoms() + relation.rhs.atoms():
            with self.subTest(atom=str(atom)):
                self.assertTrue(atom.is_quotient)
        self.assertEqual(euler_balance(relation), (0, 0))

    def test_coned_variable_must_be_group_orbit(self):
        from eoalg.errors import GroupError
        from eoalg.services.koszul import VariableOrbit
        from eoalg.services.kzero import quotient_relation

        with self.assertRaises(GroupError):
            quotient_relation(2, 1, coned=(VariableOrbit("y", (0,), 1),))

    def test_relation_serializes(self):
        from eoalg.services.kzero import quotient_relation

        data = quotient_relation(2, 1).to_dict()
        text = json.dumps(data, sort_keys=True)
        self.assertEqual(json.loads(text)["trace"][0]["rule"], "filtration")
        self.assertFalse(data["mod_torsion"])


class TestMoore(unittest.TestCase):
    """Tests for the Moore-spectrum gate."""

    def test_gate_verdicts(self):
        from eoalg.services.moore import MooreShape, Status, moore_gate

        cases = [
            ((1, 1), Status.RULED_OUT),
            ((1, 2), Status.NOT_RULED_OUT),
            ((1, 1, 1, 1, 1), Status.RULED_OUT),
            ((8, 1, 1, 1, 1), Status.NOT_RULED_OUT),
            ((1, 4), Status.NOT_RULED_OUT),
            ((1, 4, 32), Status.NOT_RULED_OUT),
            ((3, 8, 32), Status.NOT_RULED_OUT),
        ]
        for exponents, status in cases:
            with self.subTest(exponents=exponents):
                self.assertEqual(moore_gate(MooreShape(exponents)).status, status)

    def test_witness_for_height_four(self):
        from eoalg.services.moore import MooreShape, moore_gate

        verdict = moore_gate(MooreShape((1, 1, 1, 1, 1)))
        self.assertEqual(verdict.witness.bound, 8)
        self.assertEqual(verdict.witness.height_nu2, 2)
        self.assertEqual(verdict.witness.product_nu2, 0)
        self.assertEqual(verdict.caveat, "")

    def test_caveat_on_not_ruled_out(self):
        from eoalg.services.moore import CAVEAT, MooreShape, moore_gate

        verdict = moore_gate(MooreShape((1, 2)))
        self.assertEqual(verdict.caveat, CAVEAT)
        self.assertEqual(verdict.to_dict()["status"], "NotRuledOut")
        self.assertEqual(verdict.to_dict()["spectrum"], "S/(2, v1^2)")

    def test_invalid_shapes(self):
        from eoalg.errors import InvalidInput
        from eoalg.services.moore import MooreShape, moore_gate

        for exponents in [(), (1, 0), (-1, 1)]:
            with self.subTest(exponents=exponents):
                with self.assertRaises(InvalidInput):
                    MooreShape(exponents)
        with self.assertRaises(InvalidInput):
            moore_gate(MooreShape((4,)))

    def test_chi_eo(self):
        from eoalg.errors import HeightMismatch
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.moore import MooreShape, chi_eo

        self.assertEqual(chi_eo(HeightContext(2, 1), MooreShape((1, 2, 2))), 12)
        with self.assertRaises(HeightMismatch):
            chi_eo(HeightContext(2, 1), MooreShape((1, 1)))

    def test_euler_characteristic_of_table(self):
        from eoalg.errors import InvalidInput
        from eoalg.services.moore import HomotopyTable, euler_characteristic

        self.assertEqual(euler_characteristic(HomotopyTable({0: 2, 1: 4, 2: 1})), -1)
        self.assertEqual(euler_characteristic(HomotopyTable({0: 27}, prime=3)), 3)
        with self.assertRaises(InvalidInput):
            euler_characteristic(HomotopyTable({0: 6}))

    def test_nu2(self):
        from eoalg.errors import InvalidInput
        from eoalg.services.moore import divisibility_bound, nu2

        self.assertEqual([nu2(v) for v in (1, 2, 12, -8, 768)], [0, 1, 2, 3, 8])
        self.assertEqual(divisibility_bound(4), 8)
        self.assertEqual(divisibility_bound(3), 2)
        with self.assertRaises(InvalidInput):
            nu2(0)


class TestRelationFiles(unittest.TestCase):
    """Tests for relation-file loading and validation."""

    def test_bundled_files_load(self):
        from eoalg.utils.relation_files import BUNDLED, load_bundled

        for name in BUNDLED:
            with self.subTest(name=name):
                relations = load_bundled(name)
                self.assertTrue(relations.provenance)

    def test_bundled_c4_matches_presentation(self):
        from eoalg.services.steenrod import c4_relation_file
        from eoalg.utils.relation_files import load_bundled

        for m in (1, 2):
            with self.subTest(m=m):
                bundled = load_bundled(f"c4_m{m}")
                computed = c4_relation_file(m)
                self.assertEqual(bundled.table, computed.table)
                self.assertEqual(bundled.v_images, computed.v_images)
                self.assertEqual((bundled.group_n, bundled.m), (2, m))

    def test_bundled_c2_matches_computed(self):
        from eoalg.services.steenrod import c2_relation_file
        from eoalg.utils.relation_files import load_bundled

        for m in (1, 2, 3):
            with self.subTest(m=m):
                bundled = load_bundled(f"c2_m{m}")
                computed = c2_relation_file(m)
                self.assertEqual(bundled.table, computed.table)
                self.assertEqual(bundled.v_images, computed.v_images)

    def test_fragments_file(self):
        from eoalg.services.steenrod import c4_fragments_sample
        from eoalg.utils.relation_files import load_bundled

        bundled = load_bundled("c4_fragments_m1")
        self.assertTrue(bundled.has_unknown_images())
        self.assertEqual(bundled.extra_relations, c4_fragments_sample().extra_relations)

    def test_unknown_bundled_name(self):
        from eoalg.errors import RelationFileError
        from eoalg.utils.relation_files import load_bundled

        with self.assertRaises(RelationFileError):
            load_bundled("c8_m1")

    def test_schema_violations(self):
        from eoalg.errors import RelationFileError
        from eoalg.services.steenrod import c2_relation_file, c4_relation_file
        from eoalg.utils.relation_files import relation_file_from_dict, relation_file_to_dict

        good = relation_file_to_dict(c2_relation_file(1))
        wrong_version = dict(good, schema_version=2)
        wrong_degree = dict(good, v_images=[
            {"index": 1, "polynomial": [{"coefficient": 1, "exponents": [2]}]}])
        missing = {key: value for key, value in good.items() if key != "generators"}
        gap = dict(good, v_images=[{"index": 2, "polynomial": None}])
        c4_on_c2 = dict(relation_file_to_dict(c4_relation_file(1)), group_n=1)
        for label, data in [("version", wrong_version), ("degree", wrong_degree),
                            ("missing", missing), ("gap", gap), ("action", c4_on_c2)]:
            with self.subTest(case=label):
                with self.assertRaises(RelationFileError):
                    relation_file_from_dict(data)

    def test_malformed_shapes(self):
        """Test wrongly typed fields raise RelationFileError, never a bare Python error."""
        from eoalg.errors import RelationFileError
        from eoalg.services.steenrod import c2_relation_file
        from eoalg.utils.relation_files import relation_file_from_dict, relation_file_to_dict

        good = relation_file_to_dict(c2_relation_file(1))
        cases = {
            "group_n text": dict(good, group_n="two"),
            "m float": dict(good, m=1.5),
            "group_n bool": dict(good, group_n=True),
            "image not an object": dict(good, v_images=[5]),
            "images not a list": dict(good, v_images={"index": 1}),
            "index text": dict(good, v_images=[{"index": "1", "polynomial": None}]),
            "polynomial not a list": dict(good, v_images=[{"index": 1, "polynomial": 7}]),
            "term not an object": dict(good, v_images=[{"index": 1, "polynomial": [[1]]}]),
            "generator not an object": dict(good, generators=["t1"]),
            "action not a list": dict(good, action=3),
            "extra relations not a list": dict(good, extra_relations="t1"),
            "provenance not a list": dict(good, provenance=4),
        }
        for label, data in cases.items():
            with self.subTest(case=label):
                with self.assertRaises(RelationFileError):
                    relation_file_from_dict(data)

    def test_malformed_file_exits_with_usage_code(self):
        from eoalg.cli import dispatch
        from eoalg.services.steenrod import c2_relation_file
        from eoalg.utils.relation_files import relation_file_to_dict

        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "bad.json")
            with open(path, "w", encoding="utf-8") as handle:
                json.dump(dict(relation_file_to_dict(c2_relation_file(1)), group_n="two"), handle)
            outcome = dispatch(["nilpotence", "--relations", path])
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("group_n must be an integer", outcome.stderr)
        self.assertNotIn("Traceback", outcome.stderr)

    def test_save_and_load(self):
        from eoalg.services.steenrod import c4_relation_file
        from eoalg.utils.relation_files import load_relation_file, save_relation_file

        relations = c4_relation_file(2)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "c4.json")
            save_relation_file(relations, path)
            loaded = load_relation_file(path)
        self.assertEqual(loaded, relations)

    def test_missing_and_invalid_files(self):
        from eoalg.errors import RelationFileError
        from eoalg.utils.relation_files import load_relation_file

        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(RelationFileError) as caught:
                load_relation_file(os.path.join(directory, "absent.json"))
            self.assertIn("absent.json", str(caught.exception))
            broken = os.path.join(directory, "broken.json")
            with open(broken, "w", encoding="utf-8") as handle:
                handle.write("{not json")
            with self.assertRaises(RelationFileError):
                load_relation_file(broken)


class TestRegularity(unittest.TestCase):
    """Tests for nilpotence and regularity over relation files."""

    def test_c2_generators_nilpotent(self):
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.regularity import nilpotence_report
        from eoalg.utils.relation_files import load_bundled

        for m in (1, 2, 3):
            with self.subTest(m=m):
                report = nilpotence_report(HeightContext(1, m), load_bundled(f"c2_m{m}"))
                self.assertTrue(report.all_nilpotent)
                self.assertEqual(len(report.nilpotent), m)
                self.assertEqual(report.quotient_dimension, 1)

    def test_regular_sequences(self):
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.regularity import verify_regularity
        from eoalg.utils.relation_files import load_bundled

        cases = [(1, 1, "c2_m1", 1), (1, 2, "c2_m2", 1), (1, 3, "c2_m3", 1),
                 (2, 1, "c4_m1", 3), (2, 2, "c4_m2", 35)]
        for n, m, name, dimension in cases:
            with self.subTest(bundled=name):
                report = verify_regularity(HeightContext(n, m), load_bundled(name))
                self.assertTrue(report)
                self.assertEqual(report.quotient_dimension, dimension)

    def test_not_regular(self):
        """Test that (t1, t1^3) is not regular in F2[t1, t2]."""
        from eoalg.services.f2poly import Polynomial, RelationFile
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.regularity import verify_regularity
        from eoalg.services.steenrod import c2_table

        table = c2_table(2)
        relations = RelationFile(1, 2, table, (Polynomial.parse(table, "t1"),
                                               Polynomial.parse(table, "t1**3")))
        report = verify_regularity(HeightContext(1, 2), relations)
        self.assertFalse(report)
        self.assertEqual(report.to_dict()["quotient_dimension"], "infinite")

    def test_zero_images_count_towards_the_sequence(self):
        from eoalg.services.f2poly import Polynomial, RelationFile
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.regularity import verify_regularity
        from eoalg.services.steenrod import c2_table

        table = c2_table(2)
        relations = RelationFile(1, 2, table, (Polynomial.parse(table, "t1"),
                                               Polynomial.zero(table)))
        report = verify_regularity(HeightContext(1, 2), relations)
        self.assertFalse(report)
        self.assertEqual(report.sequence_length, 2)
        self.assertEqual(report.generator_count, 2)
        self.assertIn("zero image for v2", report.reason)

    def test_generator_count_comes_from_the_context(self):
        """Test that a table missing t2 cannot pass (t1, t1^3) as regular."""
        from eoalg.errors import RelationFileError
        from eoalg.services.f2poly import GeneratorTable, Polynomial, RelationFile
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.regularity import verify_regularity

        table = GeneratorTable(("t1",), (1,), ((0, -1),))
        relations = RelationFile(1, 2, table, (Polynomial.parse(table, "t1"),
                                               Polynomial.parse(table, "t1**3")))
        with self.assertRaises(RelationFileError) as caught:
            verify_regularity(HeightContext(1, 2), relations)
        self.assertIn("expected 2", str(caught.exception))

    def test_context_mismatch(self):
        from eoalg.errors import HeightMismatch
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.regularity import verify_regularity
        from eoalg.utils.relation_files import load_bundled

        with self.assertRaises(HeightMismatch):
            verify_regularity(HeightContext(2, 1), load_bundled("c2_m1"))

    def test_unknown_images(self):
        from eoalg.errors import RelationFileError
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.regularity import nilpotence_report
        from eoalg.utils.relation_files import load_bundled

        with self.assertRaises(RelationFileError):
            nilpotence_report(HeightContext(2, 1), load_bundled("c4_fragments_m1"))

    def test_theorem_ideal_adds_higher_generators(self):
        """Test that generators of height in (m, h] join the ideal."""
        from eoalg.services.f2poly import GeneratorTable, Polynomial, RelationFile
        from eoalg.services.hilbert import HeightContext
        from eoalg.services.regularity import nilpotence_report, theorem_ideal

        table = GeneratorTable(("t1", "gt1", "t2", "gt2"), (1, 1, 3, 3),
                               ((1, 1), (0, -1), (3, 1), (2, -1)))
        images = (Polynomial.parse(table, "t1 + gt1"), Polynomial.parse(table, "t1**3"))
        relations = RelationFile(2, 1, table, images)
        ideal = theorem_ideal(HeightContext(2, 1), relations)
        self.assertEqual(len(ideal.generators), 4)
        report = nilpotence_report(HeightContext(2, 1), relations, ["t1", "gt1", "t2"])
        self.assertTrue(report.all_nilpotent)
        self.assertEqual(report.quotient_dimension, 3)


class TestReportUtils(unittest.TestCase):
    """Tests for report rendering."""

    def test_json_envelope_is_deterministic(self):
        from eoalg.utils.report_utils import render_json

        first = render_json("dim", {"b": 1, "a": [1, 2]})
        second = render_json("dim", {"a": [1, 2], "b": 1})
        self.assertEqual(first, second)
        data = json.loads(first)
        self.assertEqual(data["schema_version"], 1)
        self.assertEqual(data["verb"], "dim")
        self.assertEqual(json.dumps(data, indent=2, sort_keys=True), first)

    def test_json_rejects_infinity(self):
        from eoalg.utils.report_utils import render_json

        with self.assertRaises(ValueError):
            render_json("dim", {"value": math.inf})

    def test_table(self):
        from eoalg.utils.report_utils import render_table

        text = render_table(["N", "value"], [[4, 35], [10, 1]])
        self.assertEqual(text.splitlines(), ["N   value", "--  -----", "4   35", "10  1"])
        with self.assertRaises(ValueError):
            render_table(["a"], [[1, 2]])

    def test_wrap_terms(self):
        from eoalg.utils.report_utils import wrap_terms

        self.assertEqual(wrap_terms("a + b", 10), ["a + b"])
        lines = wrap_terms("aaaa + bbbb + cccc", 11)
        self.assertEqual(lines, ["aaaa + bbbb", "+ cccc"])


class TestCommands(unittest.TestCase):
    """Tests for command registration."""

    def test_help_command_properties(self):
        from eoalg.commands.help_command import HelpCommand

        help_cmd = HelpCommand()
        self.assertEqual(help_cmd.name, "help")
        self.assertIn("verbs", help_cmd.description)

    def test_registry_discovers_every_verb(self):
        from eoalg.commands.registry import CommandRegistry

        registry = CommandRegistry()
        registry.auto_discover_commands()
        self.assertEqual(sorted(registry.get_all_commands()), [
            "binom", "dim", "filtration", "help", "k0", "moore",
            "nilpotence", "orbits", "regularity", "series", "steenrod",
        ])
        self.assertIsNone(registry.get_command("summary"))


if __name__ == "__main__":
    unittest.main()

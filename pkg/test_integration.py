"""
End-to-end tests of the eoalg command line through cli.dispatch.
"""
import json
import os
import tempfile
import unittest


def run(*argv):
    from eoalg.cli import dispatch

    return dispatch(list(argv))


class TestDimensionVerbs(unittest.TestCase):
    """dim, series and binom."""

    def test_dim_text(self):
        outcome = run("dim", "--group", "C4", "--m", "2")
        self.assertEqual(outcome.exit_code, 0)
        lines = outcome.stdout.splitlines()
        self.assertEqual(lines[0], "dim(C4, m=2) = 35")
        self.assertIn("gaussian product : 35", outcome.stdout)
        self.assertRegex(outcome.stdout, r"odd +: yes")
        self.assertEqual(outcome.stderr, "")

    def test_dim_fails_when_the_checks_fail(self):
        from unittest.mock import patch

        with patch("eoalg.services.hilbert.gaussian_product", return_value=33):
            outcome = run("dim", "--group", "C4", "--m", "2")
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("disagrees", outcome.stderr)
        self.assertEqual(outcome.stdout, "")

    def test_dim_json_envelope(self):
        outcome = run("--format", "json", "dim", "--group", "C8", "--m", "1")
        self.assertEqual(outcome.exit_code, 0)
        data = json.loads(outcome.stdout)
        self.assertEqual(data["schema_version"], 1)
        self.assertEqual(data["verb"], "dim")
        self.assertEqual(data["result"]["dimension"], 315)
        self.assertEqual(data["result"]["h"], 4)
        self.assertTrue(data["result"]["agrees"])
        self.assertEqual(json.dumps(data, indent=2, sort_keys=True), outcome.stdout.rstrip("\n"))

    def test_json_output_is_repeatable(self):
        """Test that two runs print byte-identical reports."""
        for argv in [("dim", "--group", "C4", "--m", "2"),
                     ("k0", "--group", "C8", "--kdeg", "1"),
                     ("filtration", "--group", "C8", "--kdeg", "1")]:
            with self.subTest(argv=argv):
                first = run("--format", "json", *argv)
                second = run("--format", "json", *argv)
                self.assertEqual(first.exit_code, 0)
                self.assertEqual(first.stdout, second.stdout)

    def test_series(self):
        outcome = run("series", "--group", "C4", "--m", "1")
        self.assertEqual(outcome.exit_code, 0)
        self.assertIn("f(x) = 1 + x + x^2", outcome.stdout)
        factored = run("series", "--group", "C4", "--m", "1", "--factored")
        self.assertIn("f(x) = Phi_3", factored.stdout)

    def test_series_falls_back_to_factored_form(self):
        outcome = run("--format", "json", "--max-series-degree", "1",
                      "series", "--group", "C4", "--m", "1")
        self.assertEqual(outcome.exit_code, 0)
        result = json.loads(outcome.stdout)["result"]
        self.assertIsNone(result["coefficients"])
        self.assertEqual(result["dimension"], 3)
        self.assertEqual(result["factored"], {"3": 1})

    def test_binom(self):
        outcome = run("--format", "json", "binom", "4", "2")
        self.assertEqual(outcome.exit_code, 0)
        rows = json.loads(outcome.stdout)["result"]["rows"]
        self.assertEqual(rows, [{"N": 4, "M": 2, "value": 35, "odd": True}])
        listing = run("binom", "3")
        self.assertEqual(len(listing.stdout.strip().splitlines()), 6)

    def test_binom_rejects_negative(self):
        outcome = run("binom", "-1")
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("N must be non-negative", outcome.stderr)


class TestEquivariantVerbs(unittest.TestCase):
    """orbits, filtration and k0."""

    def test_orbits(self):
        outcome = run("orbits", "--group", "C8")
        self.assertEqual(outcome.exit_code, 0)
        self.assertEqual(outcome.stdout.splitlines()[0], "6 orbits of markings of C8")
        data = json.loads(run("--format", "json", "orbits", "--group", "C8").stdout)
        self.assertEqual(data["result"]["orbit_count"], 6)
        self.assertEqual(data["result"]["burnside_count"], 6)
        self.assertEqual([row["marking"] for row in data["result"]["orbits"]],
                         ["0000", "0001", "0101", "0011", "0111", "1111"])

    def test_orbits_of_trivial_group(self):
        outcome = run("orbits", "--group", "e")
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("error: orbits:", outcome.stderr)

    def test_filtration_c8(self):
        """Test one table row per grading 0..4."""
        outcome = run("filtration", "--group", "C8", "--kdeg", "1")
        self.assertEqual(outcome.exit_code, 0)
        lines = outcome.stdout.strip().splitlines()
        self.assertEqual(len(lines), 2 + 5)
        self.assertIn(" (+) ", lines[4])
        data = json.loads(run("--format", "json", "filtration", "--group", "C8",
                              "--kdeg", "1").stdout)
        layers = data["result"]["layers"]
        self.assertEqual([layer["grading"] for layer in layers], [0, 1, 2, 3, 4])
        self.assertEqual(sum(len(layer["summands"]) for layer in layers), 6)

    def test_filtration_rejects_zero_degree(self):
        outcome = run("filtration", "--group", "C4", "--kdeg", "0")
        self.assertEqual(outcome.exit_code, 2)

    def test_k0_quotient_relation(self):
        outcome = run("k0", "--group", "C2", "--kdeg", "1", "--trace")
        self.assertEqual(outcome.exit_code, 0)
        lines = outcome.stdout.splitlines()
        self.assertEqual(lines[0], "2[M^C2] = [M^e] + [M/(x)^C2]")
        self.assertEqual(lines[1], "  1. filtration")
        self.assertEqual(lines[-1], "euler balance: 2 = 2")

    def test_k0_even_degree(self):
        outcome = run("k0", "--group", "C4", "--kdeg", "2")
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("odd degree", outcome.stderr)

    def test_k0_height_drop(self):
        outcome = run("--format", "json", "k0", "--group", "C4", "--height-drop", "--m", "1")
        self.assertEqual(outcome.exit_code, 0)
        relations = json.loads(outcome.stdout)["result"]["relations"]
        self.assertEqual(len(relations), 3)
        self.assertEqual(relations[-1]["text"],
                         "4[BP((C4))<1>^C4] == [BP((C4))<1>^e]  (mod torsion)")
        self.assertTrue(all(relation["mod_torsion"] for relation in relations))

    def test_k0_suspension(self):
        for group in ("C2", "C4", "C8"):
            for s in (1, 2, 3):
                with self.subTest(group=group, s=s):
                    outcome = run("--format", "json", "k0", "--group", group,
                                  "--suspend", str(s))
                    self.assertEqual(outcome.exit_code, 0)
                    self.assertTrue(json.loads(outcome.stdout)["result"]["agrees"])

    def test_k0_needs_a_mode(self):
        outcome = run("k0", "--group", "C4")
        self.assertEqual(outcome.exit_code, 2)


class TestMooreVerb(unittest.TestCase):

    def test_ruled_out(self):
        outcome = run("moore", "--exponents", "1,1")
        self.assertEqual(outcome.exit_code, 1)
        self.assertIn("RuledOut", outcome.stdout)
        self.assertNotIn("existence not implied", outcome.stdout)

    def test_not_ruled_out(self):
        outcome = run("moore", "--exponents", "1,2")
        self.assertEqual(outcome.exit_code, 0)
        self.assertIn("NotRuledOut", outcome.stdout)
        self.assertIn("existence not implied", outcome.stdout)

    def test_euler_characteristics(self):
        outcome = run("--format", "json", "moore", "--exponents", "1,2,2",
                      "--group", "C4", "--m", "1")
        self.assertEqual(outcome.exit_code, 0)
        euler = json.loads(outcome.stdout)["result"]["euler"]
        self.assertEqual(euler, {"chi_eo": 12, "chi_bp": 4, "chi_eo_nu2": 2, "chi_bp_nu2": 2})

    def test_group_without_m(self):
        outcome = run("moore", "--exponents", "1,2", "--group", "C4")
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("must be given together", outcome.stderr)

    def test_height_mismatch(self):
        outcome = run("moore", "--exponents", "1,2", "--group", "C4", "--m", "1")
        self.assertEqual(outcome.exit_code, 2)

    def test_bad_exponents(self):
        for text in ("1,x", "0,1", "4"):
            with self.subTest(exponents=text):
                self.assertEqual(run("moore", "--exponents", text).exit_code, 2)


class TestRelationFileVerbs(unittest.TestCase):
    """nilpotence and regularity over bundled and user relation files."""

    def test_nilpotence_bundled(self):
        for name in ("c2_m1", "c2_m2", "c2_m3", "c4_m1"):
            with self.subTest(bundled=name):
                outcome = run("--format", "json", "nilpotence", "--bundled", name)
                self.assertEqual(outcome.exit_code, 0)
                result = json.loads(outcome.stdout)["result"]
                self.assertTrue(result["all_nilpotent"])
                self.assertTrue(result["finite"])

    def test_nilpotence_of_chosen_elements(self):
        outcome = run("nilpotence", "--bundled", "c4_m1", "--element", "t1",
                      "--element", "t1*gt1")
        self.assertEqual(outcome.exit_code, 0)
        self.assertIn("quotient dimension: 3", outcome.stdout)

    def test_nilpotence_unknown_generator(self):
        outcome = run("nilpotence", "--bundled", "c4_m1", "--element", "t1 + y")
        self.assertEqual(outcome.exit_code, 2)

    def test_nilpotence_element_is_not_executed(self):
        with tempfile.TemporaryDirectory() as directory:
            marker = os.path.join(directory, "marker")
            element = f"__import__('pathlib').Path({marker!r}).touch() or t1"
            outcome = run("nilpotence", "--bundled", "c4_m1", "--element", element)
            self.assertEqual(outcome.exit_code, 2)
            self.assertFalse(os.path.exists(marker))
        self.assertIn("unexpected character", outcome.stderr)

    def test_fragments_file_is_rejected(self):
        outcome = run("nilpotence", "--bundled", "c4_fragments_m1")
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("unknown", outcome.stderr)

    def test_regularity_bundled(self):
        cases = [("c2_m2", "C2", "2", 1), ("c4_m1", "C4", "1", 3), ("c4_m2", "C4", "2", 35)]
        for name, group, m, dimension in cases:
            with self.subTest(bundled=name):
                outcome = run("--format", "json", "regularity", "--bundled", name,
                              "--group", group, "--m", m)
                self.assertEqual(outcome.exit_code, 0)
                result = json.loads(outcome.stdout)["result"]
                self.assertTrue(result["regular"])
                self.assertEqual(result["quotient_dimension"], dimension)

    def test_regularity_context_mismatch(self):
        outcome = run("regularity", "--bundled", "c2_m1", "--group", "C4", "--m", "1")
        self.assertEqual(outcome.exit_code, 2)

    def test_regularity_of_user_file(self):
        """Test that (t1, t1^3) in F2[t1, t2] is reported as not regular."""
        from eoalg.services.f2poly import Polynomial, RelationFile
        from eoalg.services.steenrod import c2_table
        from eoalg.utils.relation_files import save_relation_file

        table = c2_table(2)
        relations = RelationFile(1, 2, table, (Polynomial.parse(table, "t1"),
                                               Polynomial.parse(table, "t1**3")))
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "relations.json")
            save_relation_file(relations, path)
            outcome = run("regularity", "--relations", path, "--group", "C2", "--m", "2")
        self.assertEqual(outcome.exit_code, 1)
        self.assertIn("the quotient is infinite", outcome.stdout)

    def test_missing_relation_file(self):
        outcome = run("nilpotence", "--relations", "/nonexistent/relations.json")
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("file not found", outcome.stderr)


class TestSteenrodVerb(unittest.TestCase):

    def test_m1(self):
        outcome = run("steenrod", "--m", "1")
        self.assertEqual(outcome.exit_code, 0)
        lines = outcome.stdout.splitlines()
        self.assertEqual(lines[:2], ["zeta1 = xi1", "zeta2 = xi1**3"])
        self.assertRegex(outcome.stdout, r"staircase dimension +: 3")

    def test_m2_agrees_with_series(self):
        outcome = run("--format", "json", "steenrod", "--m", "2")
        self.assertEqual(outcome.exit_code, 0)
        result = json.loads(outcome.stdout)["result"]
        self.assertEqual(result["quotient_dimension"], 35)
        self.assertEqual(result["dimension_from_series"], 35)
        self.assertTrue(result["agrees"])
        self.assertEqual(sum(result["series"]), 35)

    def test_workers_do_not_change_the_report(self):
        serial = run("--format", "json", "steenrod", "--m", "2")
        threaded = run("--format", "json", "--workers", "3", "steenrod", "--m", "2")
        self.assertEqual(serial.stdout, threaded.stdout)


class TestGlobalBehaviour(unittest.TestCase):
    """Parsing, exit codes, logging and resource limits."""

    def test_bad_group(self):
        outcome = run("dim", "--group", "C6", "--m", "1")
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("not a cyclic 2-group", outcome.stderr)
        self.assertIn("usage:", outcome.stderr)
        self.assertEqual(outcome.stdout, "")

    def test_usage_errors(self):
        for argv in [(), ("frobnicate",), ("dim", "--group", "C4"), ("--workers", "0", "help")]:
            with self.subTest(argv=argv):
                self.assertEqual(run(*argv).exit_code, 2)

    def test_version(self):
        outcome = run("--version")
        self.assertEqual(outcome.exit_code, 0)
        self.assertIn("eoalg 0.1.0", outcome.stdout)

    def test_help_lists_every_verb(self):
        outcome = run("help")
        self.assertEqual(outcome.exit_code, 0)
        for verb in ("binom", "dim", "filtration", "k0", "moore", "nilpotence",
                     "orbits", "regularity", "series", "steenrod"):
            with self.subTest(verb=verb):
                self.assertIn(verb, outcome.stdout)
        self.assertIn("Exit codes", outcome.stdout)

    def test_resource_limit_exit_code(self):
        outcome = run("--max-basis-size", "1", "steenrod", "--m", "2")
        self.assertEqual(outcome.exit_code, 3)
        self.assertIn("max_basis_size", outcome.stderr)
        degree = run("--max-degree", "2", "steenrod", "--m", "1")
        self.assertEqual(degree.exit_code, 3)

    def test_main_script_verbs_with_m_flag(self):
        """Test verbs taking --m through main.py next to the --max-* global flags."""
        import subprocess
        import sys

        root = os.path.dirname(os.path.abspath(__file__))
        cases = [
            (["dim", "--group", "C4", "--m", "2"], 0, "= 35"),
            (["series", "--group", "C4", "--m", "1"], 0, "1 + x + x^2"),
            (["moore", "--exponents", "1,2,2", "--group", "C4", "--m", "1"], 0, "NotRuledOut"),
            (["regularity", "--bundled", "c4_m1", "--group", "C4", "--m", "1"], 0, "regular"),
        ]
        for argv, code, expected in cases:
            with self.subTest(argv=argv):
                completed = subprocess.run([sys.executable, "main.py", *argv], cwd=root,
                                           capture_output=True, text=True, timeout=120)
                self.assertEqual(completed.returncode, code, completed.stderr)
                self.assertIn(expected, completed.stdout)

    def test_large_groups_hit_the_marking_cap(self):
        cases = [
            ("orbits", "--group", "C64"),
            ("k0", "--group", "C64", "--height-drop"),
            ("k0", "--group", "C64", "--suspend", "3"),
            ("filtration", "--group", "C64", "--kdeg", "1"),
            ("--max-group-exponent", "2", "orbits", "--group", "C8"),
        ]
        for argv in cases:
            with self.subTest(argv=argv):
                outcome = run(*argv)
                self.assertEqual(outcome.exit_code, 3)
                self.assertIn("max_group_exponent", outcome.stderr)
        self.assertEqual(run("--max-group-exponent", "3", "orbits", "--group", "C8").exit_code, 0)

    def test_global_flags_are_not_abbreviated(self):
        outcome = run("--max-deg", "2", "dim", "--group", "C4", "--m", "1")
        self.assertEqual(outcome.exit_code, 2)
        self.assertIn("--max-deg", outcome.stderr)

    def test_json_logs_on_stderr(self):
        outcome = run("--log-level", "info", "--log-format", "json",
                      "dim", "--group", "C4", "--m", "1")
        self.assertEqual(outcome.exit_code, 0)
        records = [json.loads(line) for line in outcome.stderr.splitlines() if line.strip()]
        messages = [record["message"] for record in records]
        self.assertIn("dispatching dim", messages)
        self.assertTrue(all(record["level"] in ("INFO", "WARNING") for record in records))
        self.assertTrue(outcome.stdout.startswith("dim(C4, m=1) = 3"))


if __name__ == "__main__":
    unittest.main()

"""
End-to-end tests of the command line through main().
"""

import contextlib
import io
import json
import tempfile
import unittest
from pathlib import Path

from geometry import PointSet
from cli import ExperimentConfig, write_points
from main import create_parser, main, run_command


def run(argv):
    """Run main() and return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def report_of(argv):
    code, out, _ = run(argv)
    return code, json.loads(out)


class TestCount(unittest.TestCase):

    def test_elekes_construction(self):
        code, report = report_of(["count", "--poly", "x*s-y+t", "--construct", "elekes:3,3", "--check"])
        self.assertEqual(code, 0)
        self.assertEqual(report["schema"], 1)
        self.assertEqual(report["result"]["count"], "45")
        self.assertTrue(report["result"]["matches_prediction"])
        self.assertTrue(report["result"]["brute_force"]["agrees"])
        self.assertNotIn("timing", report)

    def test_threads_give_the_same_report(self):
        base = ["count", "--poly", "x*s-y+t", "--construct", "elekes:2,3"]
        _, sequential = report_of(base)
        _, threaded = report_of(base + ["--topology", "threads", "--workers", "2", "--chunk-size", "1"])
        self.assertEqual(threaded["result"], sequential["result"])
        self.assertEqual(threaded["settings"]["workflow"], {"topology": "threads", "workers": "2"})

    def test_syntax_error(self):
        code, report = report_of(["count", "--poly", "x*", "--construct", "elekes:2,2"])
        self.assertEqual(code, 1)
        self.assertEqual(report["error"]["type"], "PolynomialSyntaxError")
        self.assertEqual((report["error"]["line"], report["error"]["column"]), ("1", "3"))

    def test_missing_points(self):
        code, report = report_of(["count", "--poly", "x*s"])
        self.assertEqual(code, 1)
        self.assertIn("--points", report["error"]["message"])

    def test_timing_is_opt_in(self):
        _, report = report_of(["count", "--preset", "dot-product", "--construct", "grid:2", "--timing"])
        self.assertIn("seconds", report["timing"])


class TestAlgebraicCommands(unittest.TestCase):

    def test_cartesian_witness(self):
        code, report = report_of(["cartesian-test", "--poly", "x*s+y*t", "--g", "x", "--k", "t"])
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["status"], "cartesian")

    def test_not_cartesian(self):
        code, report = report_of(["cartesian-test", "--poly", "x*s-y+t", "--g", "x", "--k", "t"])
        self.assertEqual(code, 2)
        self.assertEqual(report["result"]["status"], "not_cartesian")

    def test_wrong_variables_for_g(self):
        code, report = report_of(["cartesian-test", "--poly", "x*s", "--g", "s", "--k", "t"])
        self.assertEqual(code, 1)
        self.assertEqual(report["error"]["type"], "VariableScopeError")

    def test_trivial_probe(self):
        code, report = report_of(["probe", "--poly", "t*(x*s+y)"])
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["status"], "cartesian")


class TestValuesAndConstruct(unittest.TestCase):

    def test_repeated_values_from_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "grid.csv"
            write_points(path, PointSet((i, j) for i in range(1, 4) for j in range(1, 4)))
            code, report = report_of(["values", "--mode", "repeated", "--poly", "(x-s)^2+(y-t)^2",
                                      "--a", "1", "--points", str(path)])
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["count"], "24")

    def test_saturation(self):
        code, report = report_of(["construct", "--construct", "saturation:3", "--gamma", "x^2",
                                  "--kappa", "s", "--seed", "1"])
        self.assertEqual(code, 0)
        self.assertEqual(report["result"]["measured_count"], "9")
        self.assertEqual(report["result"]["cartesian_test"], "cartesian")

    def test_writes_point_files(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "P.csv"
            code, _ = report_of(["construct", "--construct", "progression:4", "--write-P", str(path)])
            lines = path.read_text(encoding="utf-8").splitlines()
        self.assertEqual(code, 0)
        self.assertEqual(lines, ["u,v", "1,1", "2,2", "3,3", "4,4"])

    def test_unknown_construction(self):
        code, report = report_of(["construct", "--construct", "hexagon:3"])
        self.assertEqual(code, 1)
        self.assertEqual(report["error"]["type"], "UsageError")


class TestFrontEnd(unittest.TestCase):

    def test_list_commands(self):
        code, out, _ = run(["--list-commands"])
        self.assertEqual(code, 0)
        self.assertIn("cartesian-test", out)

    def test_list_operations(self):
        code, out, _ = run(["--list-operations"])
        self.assertEqual(code, 0)
        self.assertIn("count_intersections", out)

    def test_no_command(self):
        code, _, err = run([])
        self.assertEqual(code, 1)
        self.assertIn("usage", err)

    def test_explain(self):
        code, out, _ = run(["partition", "--M", "2", "--explain"])
        self.assertEqual(code, 0)
        self.assertIn("K_{2,T}", out)

    def test_config_round_trip(self):
        with tempfile.TemporaryDirectory() as directory:
            stored = Path(directory) / "run.json"
            output = Path(directory) / "report.json"
            code, first = report_of(["count", "--poly", "x*s-y+t", "--construct", "elekes:2,2",
                                     "--save-config", str(stored)])
            self.assertEqual(code, 0)
            code, _, _ = run(["count", "--config", str(stored), "--output", str(output)])
            self.assertEqual(code, 0)
            second = json.loads(output.read_text(encoding="utf-8"))
            self.assertEqual(first, second)
            code, _, err = run(["values", "--config", str(stored)])
        self.assertEqual(code, 1)
        self.assertIn("error:", err)

    def test_run_command_from_config(self):
        experiment = ExperimentConfig("count", polynomials={"F": "x*s-y+t"}, construct="elekes:3,3")
        with tempfile.TemporaryDirectory() as directory:
            output = Path(directory) / "report.json"
            self.assertEqual(run_command(experiment, str(output)), 0)
            report = json.loads(output.read_text(encoding="utf-8"))
        self.assertEqual(report["result"]["count"], "45")
        with self.assertRaises(ValueError):
            run_command(ExperimentConfig("solve"))

    def test_parser_requires_m_for_partition(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                create_parser().parse_args(["partition", "--poly", "x*s"])


if __name__ == "__main__":
    unittest.main()

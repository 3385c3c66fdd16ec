"""End-to-end tests for the ``coroot`` command line."""

import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from coroot_mcp.cli import EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_USAGE, main, parse_config
from coroot_mcp.errors import ValidationError


def run(*argv: str):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class CommandTests(unittest.TestCase):
    def test_roots_g2(self):
        code, out, _ = run("roots", "--type", "G", "--rank", "2")
        self.assertEqual(code, EXIT_OK)
        doc = json.loads(out)
        self.assertEqual(doc["command"], "roots")
        self.assertEqual(doc["schema"], 1)
        self.assertEqual(len(doc["coroots"]), 6)

    def test_roots_a1(self):
        code, out, _ = run("roots", "--type", "A", "--rank", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)["coroots"]), 1)

    def test_kostant(self):
        code, out, _ = run("kostant", "--type", "A", "--rank", "2", "--theta", "1,1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["count"], 2)

    def test_diag_markdown(self):
        code, out, _ = run(
            "diag", "--type", "A", "--rank", "1", "--theta", "1", "--format", "markdown"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Qℓ(0)", out)

    def test_diag_all_coroots(self):
        code, out, _ = run("diag", "--type", "B", "--rank", "2", "--all-coroots")
        self.assertEqual(code, EXIT_OK)
        rows = json.loads(out)["rows"]
        self.assertEqual(len(rows), 4)
        self.assertTrue(all(r["S1"] == {"Qℓ(0)": 1, "Qℓ(1)": -1} for r in rows))

    def test_plo_stalk_pattern(self):
        code, out, _ = run("plo-stalk", "--pattern", "2,1")
        self.assertEqual(code, EXIT_OK)
        self.assertFalse(json.loads(out)["vanishes"])

    def test_plo_stalk_config(self):
        code, out, _ = run("plo-stalk", "--type", "A", "--rank", "2", "--config", "1,0@x;0,1@y")
        self.assertEqual(code, EXIT_OK)
        doc = json.loads(out)
        self.assertEqual(len(doc["config"]), 2)
        self.assertEqual(doc["sl2"], {"0": 1, "2": 1})
        self.assertEqual(doc["sl2_by_length"], {"2": {"0": 1, "2": 1}})

    def test_uea_mul(self):
        code, out, _ = run("uea", "mul", "--type", "A", "--rank", "2", "--lhs", "e2", "--rhs", "e1")
        self.assertEqual(code, EXIT_OK)
        doc = json.loads(out)
        self.assertEqual(doc["command"], "uea mul")
        self.assertEqual(doc["product"]["terms"], {"E1*E2": 1, "E3": -1})

    def test_uea_comul(self):
        code, out, _ = run("uea", "comul", "--type", "A", "--rank", "1", "--expr", "E1*E1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            json.loads(out)["coproduct"], {"1 ⊗ E1^2": 1, "E1 ⊗ E1": 2, "E1^2 ⊗ 1": 1}
        )

    def test_uea_dims_and_basis(self):
        code, out, _ = run("uea", "dims", "--type", "G", "--rank", "2", "--max-length", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(all(r["dim"] == r["kostant"] for r in json.loads(out)["rows"]))
        code, out, _ = run("uea", "basis", "--type", "A", "--rank", "2", "--theta", "1,1")
        self.assertEqual(json.loads(out)["basis"], ["E3", "E1*E2"])

    def test_uea_check(self):
        code, out, _ = run("uea", "check", "--type", "A", "--rank", "2", "--jacobi", "--hopf")
        self.assertEqual(code, EXIT_OK)
        doc = json.loads(out)
        self.assertEqual([c["name"] for c in doc["checks"]], ["jacobi", "hopf"])
        self.assertEqual(doc["bound"], 6)

    def test_verify_a2(self):
        code, out, _ = run("verify", "--type", "A", "--rank", "2", "--max-length", "3")
        self.assertEqual(code, EXIT_OK)
        doc = json.loads(out)
        self.assertTrue(doc["passed"])
        self.assertEqual(doc["failed"], 0)
        self.assertIn("factorization", {c["check"] for c in doc["checks"]})

    def test_verify_g2(self):
        code, out, _ = run("verify", "--type", "G", "--rank", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)["passed"])

    def test_verify_single_theta(self):
        code, out, _ = run("verify", "--type", "A", "--rank", "2", "--theta", "1,1", "--max-length", "2")
        self.assertEqual(code, EXIT_OK)
        checks = {c["check"] for c in json.loads(out)["checks"]}
        self.assertIn("H_diag", checks)

    def test_verify_zero_theta_is_rejected(self):
        code, _, err = run("verify", "--type", "A", "--rank", "2", "--theta", "0,0")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("non-zero", err)

    def test_exit_failed_value(self):
        self.assertEqual(EXIT_FAILED, 1)


class ErrorTests(unittest.TestCase):
    def test_unknown_type(self):
        code, out, err = run("roots", "--type", "H", "--rank", "2")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertIn("coroot: error:", err)

    def test_malformed_theta(self):
        code, _, _ = run("kostant", "--type", "A", "--rank", "2", "--theta", "1,x")
        self.assertEqual(code, EXIT_USAGE)

    def test_wrong_theta_rank(self):
        code, _, _ = run("kostant", "--type", "A", "--rank", "2", "--theta", "1,1,1")
        self.assertEqual(code, EXIT_USAGE)

    def test_missing_group(self):
        code, _, _ = run("roots")
        self.assertEqual(code, EXIT_USAGE)

    def test_bad_expression(self):
        code, _, _ = run("uea", "mul", "--type", "A", "--rank", "2", "--lhs", "e1 e2", "--rhs", "1")
        self.assertEqual(code, EXIT_USAGE)

    def test_bad_max_length(self):
        code, _, _ = run("uea", "dims", "--type", "A", "--rank", "2", "--max-length", "0")
        self.assertEqual(code, EXIT_USAGE)

    def test_unwritable_output(self):
        code, _, err = run(
            "roots", "--type", "A", "--rank", "1", "--out", "/nonexistent-dir/roots.json"
        )
        self.assertEqual(code, EXIT_IO)
        self.assertIn("I/O error", err)

    def test_argparse_usage_errors(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(["roots", "--format", "xml"])
        self.assertEqual(ctx.exception.code, 2)

    def test_parse_config(self):
        self.assertEqual(parse_config("1,1@x; 0,1@y", 2), (((1, 1), "x"), ((0, 1), "y")))
        with self.assertRaises(ValidationError):
            parse_config("1,1", 2)
        with self.assertRaises(ValidationError):
            parse_config(";", 2)


class FixtureTests(unittest.TestCase):
    def test_fixture_needs_out(self):
        code, _, _ = run("fixture", "roots", "--type", "A", "--rank", "2")
        self.assertEqual(code, EXIT_USAGE)

    def test_fixtures_are_byte_identical(self):
        with tempfile.TemporaryDirectory() as tmp:
            first, second = Path(tmp, "a.json"), Path(tmp, "b.json")
            for path in (first, second):
                code, out, _ = run(
                    "fixture", "diag", "--type", "G", "--rank", "2", "--theta", "1,1", "--out", str(path)
                )
                self.assertEqual(code, EXIT_OK)
                self.assertEqual(out, "")
            self.assertEqual(first.read_bytes(), second.read_bytes())
            doc = json.loads(first.read_text(encoding="utf-8"))
            self.assertEqual(doc["kind"], "diag")
            self.assertEqual(doc["command"], "fixture")

    def test_fixture_ignores_markdown(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp, "dims.json")
            code, _, _ = run(
                "fixture", "dims", "--type", "A", "--rank", "2", "--format", "markdown", "--out", str(path)
            )
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(json.loads(path.read_text(encoding="utf-8"))["kind"], "dims")


if __name__ == "__main__":
    unittest.main()

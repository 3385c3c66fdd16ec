"""Tests for the check registry behind ``coroot verify``."""

import unittest
from unittest import mock

from coroot_mcp import verify
from coroot_mcp.errors import NotACharacterError, StructureConstantError
from coroot_mcp.root_datum import GroupType, build_root_datum


def datum(family: str, rank: int):
    return build_root_datum(GroupType(family, rank))


class PurityCheckTests(unittest.TestCase):
    def test_rows_pass_on_b2(self):
        reports = verify.purity_checks(datum("B", 2), 4)
        self.assertTrue(all(r.passed for r in reports))
        self.assertEqual(
            {r.check for r in reports}, {"plo_stalk", "oscillator_purity", "factorization"}
        )

    def test_factorization_row(self):
        for family, rank in [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("G", 2)]:
            report = verify.factorization_check(datum(family, rank), 4)
            with self.subTest(group=f"{family}{rank}"):
                self.assertTrue(report.passed)
                self.assertIsNone(report.theta)

    def test_factorization_needs_two_points(self):
        report = verify.factorization_check(datum("A", 2), 1)
        self.assertTrue(report.passed)
        self.assertEqual(report.computed, "0 pairs")

    def test_errors_become_failed_rows(self):
        broken = mock.Mock(side_effect=NotACharacterError("broken stalk"))
        with mock.patch.object(verify, "oscillator_stalk_char", broken):
            reports = verify.purity_checks(datum("A", 2), 2)
        failed = [r for r in reports if not r.passed]
        self.assertTrue(failed)
        self.assertTrue(all(r.computed == "error: broken stalk" for r in failed))
        self.assertEqual(
            {r.check for r in failed}, {"oscillator_purity", "factorization"}
        )
        self.assertTrue(all(r.passed for r in reports if r.check == "plo_stalk"))


class HopfCheckTests(unittest.TestCase):
    def test_suite_names(self):
        reports = verify.hopf_checks(datum("A", 2), 3)
        self.assertEqual([r.check for r in reports], ["jacobi", "associativity", "hopf"])
        self.assertTrue(all(r.passed for r in reports))

    def test_errors_become_failed_rows(self):
        broken = mock.Mock(side_effect=StructureConstantError("no constants"))
        with mock.patch.object(verify, "check_jacobi", broken):
            reports = verify.hopf_checks(datum("A", 2), 3)
        self.assertEqual([r.passed for r in reports], [False, True, True])
        self.assertEqual(reports[0].computed, "error: no constants")


class RunVerificationTests(unittest.TestCase):
    def test_a2_includes_factorization(self):
        reports = verify.run_verification(datum("A", 2), max_length=3)
        self.assertTrue(all(r.passed for r in reports))
        self.assertIn("factorization", [r.check for r in reports])

    def test_a_failing_check_keeps_the_rest(self):
        broken = mock.Mock(side_effect=NotACharacterError("broken stalk"))
        with mock.patch.object(verify, "oscillator_stalk_char", broken):
            reports = verify.run_verification(datum("A", 1), max_length=2)
        failed = {r.check for r in reports if not r.passed}
        self.assertEqual(failed, {"oscillator_purity", "factorization"})
        self.assertIn("S1", [r.check for r in reports])
        self.assertIn("hopf", [r.check for r in reports])


if __name__ == "__main__":
    unittest.main()

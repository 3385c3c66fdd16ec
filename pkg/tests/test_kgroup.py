"""Unit tests for Grothendieck-group classes and the diagonal S1/S2 computation."""

import unittest

from coroot_mcp.errors import ValidationError
from coroot_mcp.kgroup import (
    Block,
    DiagonalClass,
    KClass,
    SheafTag,
    class_F,
    class_Omega,
    class_R,
    class_tilde_Omega,
    class_U,
    compute_S1,
    compute_S2,
    convolve,
    diagonal_part,
    empty_class,
    oscillator_diagonal,
    reconstruct_H_diagonal,
)
from coroot_mcp.kostant import kostant_count
from coroot_mcp.lefschetz import CollisionPattern, decompose_sl2, plo_stalk_char
from coroot_mcp.root_datum import GroupType, build_root_datum, coroot_index, coweights_up_to
from coroot_mcp.twist import TwistPoly

ONE_MINUS_Q = TwistPoly.from_exponents({0: 1, 1: -1})
MINUS_Q = TwistPoly.monomial(1, -1)
SWEEP = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)]


def datum(family: str, rank: int):
    return build_root_datum(GroupType(family, rank))


class BuilderTests(unittest.TestCase):
    def test_u_on_a1(self):
        c = class_U(datum("A", 1), (1,))
        self.assertEqual(dict(c.terms), {(Block(0, 1, SheafTag.CONST),): TwistPoly.one()})

    def test_u_term_count_is_kostant_count(self):
        d = datum("A", 2)
        self.assertEqual(len(class_U(d, (1, 1)).terms), 2)
        self.assertEqual(len(class_U(d, (2, 2)).terms), kostant_count(d, (2, 2)))

    def test_zero_theta_gives_the_empty_term(self):
        d = datum("B", 2)
        for builder in (class_U, class_Omega, class_F, class_tilde_Omega):
            self.assertEqual(builder(d, (0, 0)), empty_class(2))

    def test_omega_signs_and_twists(self):
        d = datum("A", 1)
        self.assertEqual(
            dict(class_Omega(d, (1,)).terms), {(Block(0, 1, SheafTag.EXT_TRIV),): MINUS_Q}
        )
        self.assertEqual(
            dict(class_Omega(d, (2,)).terms),
            {(Block(0, 2, SheafTag.EXT_TRIV),): TwistPoly.monomial(2)},
        )

    def test_f_coefficients(self):
        d = datum("A", 2)
        terms = dict(class_F(d, (1, 1)).terms)
        self.assertEqual(terms[(Block(2, 1, SheafTag.EXT_STD),)], TwistPoly.from_exponents({"1/2": -1}))
        self.assertEqual(
            terms[(Block(0, 1, SheafTag.EXT_STD), Block(1, 1, SheafTag.EXT_STD))],
            TwistPoly.monomial(1),
        )

    def test_tilde_omega_on_a1(self):
        c = class_tilde_Omega(datum("A", 1), (1,))
        self.assertEqual(
            dict(c.terms),
            {
                (Block(0, 1, SheafTag.CONST),): TwistPoly.one(),
                (Block(0, 1, SheafTag.EXT_TRIV),): MINUS_Q,
            },
        )

    def test_tilde_omega_on_a2(self):
        # U(1,1): 2 terms, two mixed splittings, Omega(1,1): 2 terms
        d = datum("A", 2)
        c = class_tilde_Omega(d, (1, 1))
        self.assertEqual(len(c.terms), 6)
        mixed = (Block(0, 1, SheafTag.EXT_TRIV), Block(1, 1, SheafTag.CONST))
        self.assertEqual(c.terms[mixed], MINUS_Q)
        c.validate_against(d)

    def test_negative_theta_raises(self):
        with self.assertRaises(ValidationError):
            class_U(datum("A", 2), (1, -1))

    def test_block_needs_positive_multiplicity(self):
        with self.assertRaises(ValidationError):
            Block(0, 0, SheafTag.CONST)

    def test_validate_against_catches_wrong_sum(self):
        bad = KClass.build((1, 1), [((Block(0, 1, SheafTag.CONST),), TwistPoly.one())])
        with self.assertRaises(ValidationError):
            bad.validate_against(datum("A", 2))


class ClassAlgebraTests(unittest.TestCase):
    def test_convolution_commutes(self):
        d = datum("A", 2)
        a, b = class_Omega(d, (1, 0)), class_U(d, (1, 1))
        self.assertEqual(convolve(a, b), convolve(b, a))

    def test_convolution_is_associative(self):
        d = datum("B", 2)
        a, b, c = class_U(d, (1, 0)), class_F(d, (0, 1)), class_Omega(d, (1, 1))
        self.assertEqual(convolve(convolve(a, b), c), convolve(a, convolve(b, c)))

    def test_addition_and_negation(self):
        c = class_U(datum("A", 2), (1, 1))
        self.assertEqual(len((c - c).terms), 0)
        self.assertEqual(c + c, c.scaled(TwistPoly.one() * 2))

    def test_adding_different_thetas_raises(self):
        d = datum("A", 2)
        with self.assertRaises(ValidationError):
            class_U(d, (1, 0)) + class_U(d, (0, 1))

    def test_diagonal_part_is_linear(self):
        d = datum("A", 2)
        a, b = class_tilde_Omega(d, (1, 1)), class_F(d, (1, 1))
        self.assertEqual(diagonal_part(a + b), diagonal_part(a) + diagonal_part(b))

    def test_diagonal_part_values(self):
        d = datum("A", 2)
        self.assertEqual(diagonal_part(class_tilde_Omega(datum("A", 1), (1,))).poly, ONE_MINUS_Q)
        self.assertEqual(diagonal_part(class_U(d, (2, 1))), DiagonalClass(TwistPoly.zero()))
        self.assertEqual(diagonal_part(empty_class(2)).poly, 0)

    def test_truncation_keeps_the_diagonal(self):
        cases = [
            ("A", 2, (1, 1)),
            ("A", 2, (2, 1)),
            ("A", 2, (1, 2)),
            ("B", 2, (2, 1)),
            ("B", 2, (2, 2)),
            ("G", 2, (1, 3)),
            ("G", 2, (2, 3)),
        ]
        for family, rank, theta in cases:
            d = datum(family, rank)
            full = class_R(d, theta, include_maximal_defect=False)
            short = class_R(d, theta, include_maximal_defect=False, max_length=1)
            self.assertEqual(diagonal_part(full), diagonal_part(short))
            self.assertEqual(
                diagonal_part(class_tilde_Omega(d, theta)),
                diagonal_part(class_tilde_Omega(d, theta, max_length=1)),
            )

    def test_truncated_sweep_on_a_two_part_theta(self):
        d = datum("A", 2)
        # (2, 2) needs two parts, so no length-1 term survives
        self.assertEqual(dict(class_R(d, (2, 2), max_length=1).terms), {})
        self.assertEqual(dict(class_tilde_Omega(d, (2, 2), max_length=1).terms), {})


class DiagonalIdentityTests(unittest.TestCase):
    def test_s1_and_s2_on_every_coroot(self):
        for family, rank in SWEEP + [("F", 4)]:
            d = datum(family, rank)
            for theta in d.positive_coroots:
                with self.subTest(group=d.label, theta=theta):
                    self.assertEqual(compute_S1(d, theta).poly, ONE_MINUS_Q)
                    self.assertEqual(compute_S2(d, theta).poly, 2)

    def test_highest_coroot_of_e8(self):
        d = datum("E", 8)
        theta = d.positive_coroots[-1]
        self.assertEqual(theta, (2, 3, 4, 6, 5, 4, 3, 2))
        self.assertEqual(compute_S1(d, theta).poly, ONE_MINUS_Q)
        self.assertEqual(compute_S2(d, theta).poly, 2)

    def test_vanishing_off_the_coroots(self):
        for family, rank in SWEEP:
            d = datum(family, rank)
            for theta in coweights_up_to(rank, 4):
                if coroot_index(d, theta) is not None or not kostant_count(d, theta):
                    continue
                with self.subTest(group=d.label, theta=theta):
                    self.assertFalse(compute_S1(d, theta).poly)
                    self.assertFalse(compute_S2(d, theta).poly)

    def test_diagonal_reconstruction(self):
        for family, rank in SWEEP:
            d = datum(family, rank)
            for theta in d.positive_coroots:
                with self.subTest(group=d.label, theta=theta):
                    self.assertTrue(reconstruct_H_diagonal(d, theta).is_standard())

    def test_reconstruction_matches_the_first_oscillator(self):
        d = datum("G", 2)
        p1 = decompose_sl2(plo_stalk_char(CollisionPattern((1,))).char)
        for theta in d.positive_coroots:
            self.assertEqual(reconstruct_H_diagonal(d, theta), p1)

    def test_reconstruction_off_the_coroots_is_empty(self):
        self.assertEqual(reconstruct_H_diagonal(datum("A", 2), (2, 1)).as_dict(), {})

    def test_oscillator_diagonal_is_s1_minus_s2(self):
        for family, rank in [("A", 2), ("B", 2), ("G", 2)]:
            d = datum(family, rank)
            for theta in d.positive_coroots:
                expected = compute_S1(d, theta) - compute_S2(d, theta)
                self.assertEqual(oscillator_diagonal(d, theta), expected)
                self.assertEqual(expected.poly, TwistPoly.from_exponents({0: -1, 1: -1}))

    def test_zero_theta_raises(self):
        d = datum("A", 2)
        for fn in (compute_S1, compute_S2, reconstruct_H_diagonal):
            with self.assertRaises(ValidationError):
                fn(d, (0, 0))

    def test_labels(self):
        s1 = compute_S1(datum("A", 1), (1,))
        self.assertEqual(s1.to_json(), {"Qℓ(0)": 1, "Qℓ(1)": -1})


if __name__ == "__main__":
    unittest.main()

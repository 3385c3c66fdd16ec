"""Unit tests for root data, positive coroots and the Langlands dual."""

import itertools
import unittest
from fractions import Fraction

from coroot_mcp.errors import ValidationError
from coroot_mcp.root_datum import (
    GroupType,
    RootDatum,
    build_root_datum,
    coroot_index,
    coweights_below,
    coweights_up_to,
    highest_coroot,
    is_positive_coroot,
    langlands_dual,
    leq,
    parse_group_type,
    parse_theta,
    simple_reflection,
    symmetrized_form,
)


def datum(family: str, rank: int) -> RootDatum:
    return build_root_datum(GroupType(family, rank))


class GroupTypeTests(unittest.TestCase):
    def test_admissible_types(self):
        for family, rank in [("A", 1), ("B", 2), ("C", 3), ("D", 4), ("E", 6), ("F", 4), ("G", 2)]:
            self.assertEqual(GroupType(family, rank).label, f"{family}{rank}")

    def test_inadmissible_types_raise(self):
        for family, rank in [("H", 2), ("B", 1), ("D", 2), ("E", 5), ("F", 3), ("G", 3), ("A", 0)]:
            with self.assertRaises(ValidationError):
                GroupType(family, rank)

    def test_parse_normalizes(self):
        self.assertEqual(parse_group_type(" g", "2"), GroupType("G", 2))

    def test_parse_rejects_non_integer_rank(self):
        with self.assertRaises(ValidationError):
            parse_group_type("A", "two")


class PositiveCorootTests(unittest.TestCase):
    def test_counts(self):
        expected = {
            ("A", 1): 1,
            ("A", 3): 6,
            ("B", 3): 9,
            ("C", 3): 9,
            ("D", 4): 12,
            ("G", 2): 6,
            ("F", 4): 24,
            ("E", 6): 36,
            ("E", 7): 63,
            ("E", 8): 120,
        }
        for (family, rank), count in expected.items():
            with self.subTest(group=f"{family}{rank}"):
                d = datum(family, rank)
                self.assertEqual(len(d.positive_coroots), count)
                self.assertEqual(len(d.positive_roots), count)

    def test_a2_order(self):
        self.assertEqual(datum("A", 2).positive_coroots, ((1, 0), (0, 1), (1, 1)))

    def test_g2_coroots(self):
        d = datum("G", 2)
        self.assertEqual(
            d.positive_coroots, ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3))
        )
        self.assertEqual(
            d.positive_roots, ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
        )
        self.assertEqual(highest_coroot(d), (2, 3))

    def test_b2_and_c2_coroots(self):
        self.assertEqual(datum("B", 2).positive_coroots, ((1, 0), (0, 1), (1, 1), (2, 1)))
        self.assertEqual(datum("C", 2).positive_coroots, ((1, 0), (0, 1), (1, 1), (1, 2)))

    def test_simple_coroots_come_first(self):
        for family, rank in [("A", 3), ("B", 3), ("F", 4), ("E", 6)]:
            d = datum(family, rank)
            for i in range(rank):
                self.assertEqual(d.positive_coroots[i], tuple(int(j == i) for j in range(rank)))

    def test_coroot_lookup(self):
        d = datum("A", 2)
        self.assertTrue(is_positive_coroot(d, (1, 1)))
        self.assertFalse(is_positive_coroot(d, (2, 1)))
        self.assertEqual(coroot_index(d, [0, 1]), 1)
        self.assertIsNone(coroot_index(d, (2, 0)))

    def test_simple_reflection(self):
        d = datum("A", 2)
        self.assertEqual(simple_reflection(d, 0, (1, 0)), (-1, 0))
        self.assertEqual(simple_reflection(d, 0, (0, 1)), (1, 1))


class ReflectionTests(unittest.TestCase):
    SMALL = [
        ("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("G", 2),
    ]

    def test_reflections_preserve_the_coroot_system(self):
        for family, rank in self.SMALL:
            d = datum(family, rank)
            listed = set(d.positive_coroots)
            for i in range(rank):
                for beta in d.positive_coroots:
                    image = simple_reflection(d, i, beta)
                    with self.subTest(group=d.label, i=i, coroot=beta):
                        negated = tuple(-x for x in image)
                        self.assertTrue(image in listed or negated in listed)
                        self.assertEqual(simple_reflection(d, i, image), beta)

    def test_reflections_preserve_the_root_system(self):
        for family, rank in self.SMALL:
            d = datum(family, rank)
            listed = set(d.positive_roots)
            for i in range(rank):
                for alpha in d.positive_roots:
                    image = simple_reflection(d, i, alpha, coroot=False)
                    negated = tuple(-x for x in image)
                    self.assertTrue(image in listed or negated in listed, (d.label, i, alpha))
                    self.assertEqual(simple_reflection(d, i, image, coroot=False), alpha)

    def test_only_the_simple_coroot_changes_sign(self):
        for family, rank in self.SMALL:
            d = datum(family, rank)
            for i in range(rank):
                simple = d.positive_coroots[i]
                others = [c for c in d.positive_coroots if c != simple]
                self.assertEqual(simple_reflection(d, i, simple), tuple(-x for x in simple))
                self.assertEqual({simple_reflection(d, i, c) for c in others}, set(others))


class DualTests(unittest.TestCase):
    def test_dual_swaps_b_and_c(self):
        self.assertEqual(langlands_dual(datum("B", 3)).label, "C3")
        self.assertEqual(langlands_dual(datum("C", 3)).label, "B3")
        self.assertEqual(langlands_dual(datum("G", 2)).label, "G2")

    def test_dual_is_an_involution(self):
        for family, rank in [("B", 3), ("G", 2), ("F", 4), ("A", 2)]:
            d = datum(family, rank)
            self.assertEqual(langlands_dual(langlands_dual(d)), d)

    def test_dual_roots_are_coroots(self):
        d = datum("B", 2)
        dual = langlands_dual(d)
        self.assertEqual(dual.positive_roots, d.positive_coroots)
        self.assertEqual(dual.positive_coroots, d.positive_roots)

    def test_dual_of_b_matches_c_table(self):
        self.assertEqual(langlands_dual(datum("B", 3)).cartan, datum("C", 3).cartan)


class CoweightTests(unittest.TestCase):
    def test_parse_theta(self):
        self.assertEqual(parse_theta("1, 0,2", 3), (1, 0, 2))

    def test_parse_theta_rejects_garbage(self):
        for text, rank in [("1,x", 2), ("1,0", 3), ("-1,0", 2), ("", 1)]:
            with self.assertRaises(ValidationError):
                parse_theta(text, rank)

    def test_leq(self):
        self.assertTrue(leq((0, 1), (1, 1)))
        self.assertFalse(leq((2, 0), (1, 1)))
        with self.assertRaises(ValidationError):
            leq((1,), (1, 1))

    def test_leq_is_a_partial_order(self):
        for rank in (1, 2, 3):
            points = list(itertools.product(range(4), repeat=rank))
            below = {(a, b): leq(a, b) for a in points for b in points}
            for a in points:
                self.assertTrue(below[a, a])
            for a, b in itertools.product(points, repeat=2):
                if a != b and below[a, b]:
                    self.assertFalse(below[b, a], (a, b))
            for a, b in itertools.product(points, repeat=2):
                if not below[a, b]:
                    continue
                for c in points:
                    if below[b, c]:
                        self.assertTrue(below[a, c], (a, b, c))

    def test_coweights_below(self):
        self.assertEqual(len(list(coweights_below((1, 2)))), 6)

    def test_coweights_up_to(self):
        found = list(coweights_up_to(2, 2))
        self.assertEqual(set(found), {(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)})
        self.assertEqual([sum(v) for v in found], [1, 1, 2, 2, 2])


class SymmetrizedFormTests(unittest.TestCase):
    def test_g2(self):
        form = symmetrized_form(datum("G", 2))
        self.assertEqual(form, ((Fraction(2), Fraction(-3)), (Fraction(-3), Fraction(6))))

    def test_symmetric_for_all_small_types(self):
        for family, rank in [("B", 3), ("C", 3), ("F", 4), ("D", 4)]:
            form = symmetrized_form(datum(family, rank))
            for i in range(rank):
                for j in range(rank):
                    self.assertEqual(form[i][j], form[j][i])
            self.assertEqual(min(form[i][i] for i in range(rank)), 2)


class JsonTests(unittest.TestCase):
    def test_round_trip(self):
        d = datum("F", 4)
        self.assertEqual(RootDatum.from_json(d.to_json()), d)

    def test_mismatched_coroots_rejected(self):
        doc = datum("A", 2).to_json()
        doc["positive_coroots"] = [[1, 0], [0, 1]]
        with self.assertRaises(ValidationError):
            RootDatum.from_json(doc)


if __name__ == "__main__":
    unittest.main()

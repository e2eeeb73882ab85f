import unittest

from hohf_mcdm.models import CombinePolicy, Comparison
from hohf_mcdm.services.gtype_values import Crisp, Hfe, IntuPair, Tfn
from hohf_mcdm.services.hohfs_core import (
    HOHFE,
    DecisionMatrix,
    HOHFEError,
    WeightedTerm,
    hohfe_combine,
    hohfe_compare,
    hohfe_equal,
    hohfe_score,
    hohfs_compare,
    hohfs_score,
)


class HOHFETests(unittest.TestCase):
    def test_duplicates_collapse_keeping_first(self):
        h = HOHFE.of(Tfn(0.1, 0.2, 0.3), Hfe.of(0.4), Tfn(0.1, 0.2, 0.3))
        self.assertEqual(h.elements, (Tfn(0.1, 0.2, 0.3), Hfe.of(0.4)))

    def test_empty_rejected(self):
        with self.assertRaises(HOHFEError) as ctx:
            HOHFE(())
        self.assertEqual(ctx.exception.code, "EMPTY_HOHFE")

    def test_equality_ignores_order(self):
        left = HOHFE.of(Crisp(0.1), Crisp(0.2))
        right = HOHFE.of(Crisp(0.2), Crisp(0.1))
        self.assertTrue(hohfe_equal(left, right))
        self.assertFalse(hohfe_equal(left, HOHFE.of(Crisp(0.1))))

    def test_score_is_member_mean(self):
        h = HOHFE.of(Tfn(0.4, 0.5, 0.6), Hfe.of(0.7, 0.8, 0.9))
        self.assertAlmostEqual(hohfe_score(h), 0.65, places=12)

    def test_compare(self):
        better = HOHFE.of(Crisp(0.6))
        worse = HOHFE.of(Crisp(0.4))
        self.assertIs(hohfe_compare(better, worse), Comparison.SUCCEEDS)
        self.assertIs(hohfe_compare(worse, better), Comparison.PRECEDES)
        self.assertIs(hohfe_compare(better, better), Comparison.EQUIVALENT)

    def test_hohfs_score_and_compare(self):
        rows = [HOHFE.of(Crisp(0.2)), HOHFE.of(Crisp(0.4))]
        self.assertAlmostEqual(hohfs_score(rows), 0.3, places=12)
        self.assertIs(hohfs_compare(rows, [HOHFE.of(Crisp(0.5))]), Comparison.PRECEDES)
        with self.assertRaises(HOHFEError):
            hohfs_score([])


class CombineTests(unittest.TestCase):
    def test_typewise_matches_energy_row(self):
        x3 = HOHFE.of(Tfn(0.5, 0.7, 0.7), Tfn(0.7, 0.8, 0.9))
        x4 = HOHFE.of(Tfn(0.2, 0.3, 0.4), Hfe.of(0.3, 0.4, 0.5))
        result = hohfe_combine([WeightedTerm(0.3, x3), WeightedTerm(0.7, x4)])

        self.assertEqual(len(result), 3)
        expected = [
            (0.269, 0.3759, 0.4312),
            (0.3206, 0.3996, 0.4744),
            (0.21, 0.28, 0.35),
        ]
        for element, degrees in zip(result, expected):
            for actual, wanted in zip(element.degrees(), degrees):
                self.assertAlmostEqual(actual, wanted, places=9)

    def test_zero_weight_terms_are_dropped(self):
        only = HOHFE.of(Crisp(0.5))
        result = hohfe_combine(
            [WeightedTerm(0.0, HOHFE.of(Hfe.of(0.1))), WeightedTerm(1.0, only)]
        )
        self.assertTrue(hohfe_equal(result, only))

    def test_all_zero_weights_rejected(self):
        with self.assertRaises(HOHFEError) as ctx:
            hohfe_combine([WeightedTerm(0.0, HOHFE.of(Crisp(0.5)))])
        self.assertEqual(ctx.exception.code, "EMPTY_TERMS")
        with self.assertRaises(HOHFEError):
            hohfe_combine([])

    def test_strict_uniform_rejects_mixed_variants(self):
        terms = [
            WeightedTerm(0.5, HOHFE.of(Tfn(0.1, 0.2, 0.3))),
            WeightedTerm(0.5, HOHFE.of(Hfe.of(0.1, 0.2, 0.3))),
        ]
        with self.assertRaises(HOHFEError) as ctx:
            hohfe_combine(terms, CombinePolicy.STRICT_UNIFORM)
        self.assertEqual(ctx.exception.code, "MIXED_TYPES")

    def test_strict_uniform_full_cross_product(self):
        terms = [
            WeightedTerm(0.5, HOHFE.of(IntuPair(0.2, 0.5), IntuPair(0.3, 0.4))),
            WeightedTerm(0.5, HOHFE.of(IntuPair(0.1, 0.6), IntuPair(0.4, 0.4))),
        ]
        self.assertEqual(len(hohfe_combine(terms, CombinePolicy.STRICT_UNIFORM)), 4)


class DecisionMatrixTests(unittest.TestCase):
    def test_dimension_checks(self):
        cell = HOHFE.of(Crisp(0.5))
        with self.assertRaises(HOHFEError) as ctx:
            DecisionMatrix(("a", "b"), ("c",), ((cell,),))
        self.assertEqual(ctx.exception.code, "DIMENSION_MISMATCH")
        with self.assertRaises(HOHFEError) as ctx:
            DecisionMatrix(("a", "a"), ("c",), ((cell,), (cell,)))
        self.assertEqual(ctx.exception.code, "DUPLICATE_LABEL")

    def test_lookup(self):
        cell = HOHFE.of(Crisp(0.5))
        dm = DecisionMatrix(("a",), ("c",), ((cell,),))
        self.assertIs(dm.cell("a", "c"), cell)
        with self.assertRaises(HOHFEError) as ctx:
            dm.row("z")
        self.assertEqual(ctx.exception.code, "UNKNOWN_ALTERNATIVE")
        with self.assertRaises(HOHFEError) as ctx:
            dm.cell("a", "z")
        self.assertEqual(ctx.exception.code, "UNKNOWN_CRITERION")


if __name__ == "__main__":
    unittest.main()

import unittest

from hohf_mcdm.models import Comparison, IntuScaling, ValidationMode
from hohf_mcdm.services.gtype_values import (
    Crisp,
    GValueError,
    Hfe,
    IntuPair,
    Tfn,
    gv_compare,
    gv_equal,
    gv_oplus,
    gv_power,
    gv_scale,
    gv_score,
    gv_validate,
    zero_of,
)
from hohf_mcdm.services.settings import ArithmeticOptions


def _assert_degrees(test, value, expected, places=9):
    test.assertEqual(len(value.degrees()), len(expected))
    for actual, wanted in zip(value.degrees(), expected):
        test.assertAlmostEqual(actual, wanted, places=places)


class ScaleTests(unittest.TestCase):
    def test_scales_tfn_and_hfe_componentwise(self):
        _assert_degrees(self, gv_scale(0.3, Tfn(0.5, 0.7, 0.7)), (0.15, 0.21, 0.21))
        _assert_degrees(self, gv_scale(0.7, Hfe.of(0.3, 0.4, 0.5)), (0.21, 0.28, 0.35))
        _assert_degrees(self, gv_scale(0.5, Crisp(0.8)), (0.4,))

    def test_intu_pair_example_rule(self):
        scaled = gv_scale(0.2, IntuPair(0.2, 0.5))
        self.assertAlmostEqual(scaled.mu, 1 - 0.8**0.2, places=12)
        self.assertAlmostEqual(scaled.nu, 0.5**0.2, places=12)

    def test_intu_pair_printed_rule_uses_power(self):
        options = ArithmeticOptions(intu_scaling=IntuScaling.PRINTED)
        scaled = gv_scale(0.4, IntuPair(0.3, 0.5), options=options)
        self.assertEqual(scaled, gv_power(0.4, IntuPair(0.3, 0.5)))
        self.assertAlmostEqual(scaled.mu, 0.3**0.4, places=12)

    def test_intu_pair_zero_weight_is_identity(self):
        self.assertEqual(gv_scale(0, IntuPair(0.3, 0.5)), IntuPair(0.0, 1.0))

    def test_intu_pair_rejects_negative_lambda(self):
        with self.assertRaises(GValueError) as ctx:
            gv_scale(-0.1, IntuPair(0.3, 0.5))
        self.assertEqual(ctx.exception.code, "NEGATIVE_LAMBDA")

    def test_negative_lambda_only_in_lenient_mode(self):
        scaled = gv_scale(-0.2, Tfn(0.1, 0.4, 0.7))
        _assert_degrees(self, scaled, (-0.02, -0.08, -0.14))
        with self.assertRaises(GValueError) as ctx:
            gv_scale(-0.2, Tfn(0.1, 0.4, 0.7), mode=ValidationMode.STRICT)
        self.assertEqual(ctx.exception.code, "OUT_OF_RANGE")

    def test_negative_scaling_keeps_hfe_sorted(self):
        scaled = gv_scale(-1.0, Hfe.of(0.1, 0.2, 0.3))
        self.assertEqual(scaled.values, (-0.3, -0.2, -0.1))


class OplusTests(unittest.TestCase):
    def test_tfn_probabilistic_sum(self):
        total = gv_oplus(Tfn(0.15, 0.21, 0.21), Tfn(0.14, 0.21, 0.28))
        _assert_degrees(self, total, (0.269, 0.3759, 0.4312))

    def test_intu_pair_sum(self):
        total = gv_oplus(IntuPair(0.2, 0.5), IntuPair(0.3, 0.4))
        _assert_degrees(self, total, (0.44, 0.2))

    def test_type_mismatch(self):
        with self.assertRaises(GValueError) as ctx:
            gv_oplus(Tfn(0.1, 0.2, 0.3), Hfe.of(0.1, 0.2, 0.3))
        self.assertEqual(ctx.exception.code, "TYPE_MISMATCH")

    def test_hfe_cardinality_mismatch(self):
        with self.assertRaises(GValueError) as ctx:
            gv_oplus(Hfe.of(0.1, 0.2), Hfe.of(0.1, 0.2, 0.3))
        self.assertEqual(ctx.exception.code, "CARDINALITY_MISMATCH")

    def test_hfe_cross_product_option(self):
        options = ArithmeticOptions(hfe_cross_product=True)
        total = gv_oplus(Hfe.of(0.1, 0.2), Hfe.of(0.5), options=options)
        _assert_degrees(self, total, (0.55, 0.6))

    def test_zero_is_identity(self):
        for value in (Crisp(0.4), Tfn(0.1, 0.2, 0.3), Hfe.of(0.2, 0.9), IntuPair(0.3, 0.6)):
            with self.subTest(value=value):
                self.assertTrue(gv_equal(gv_oplus(value, zero_of(value)), value))


class ValidateTests(unittest.TestCase):
    def test_unsorted_tfn_fails_both_modes(self):
        for mode in ValidationMode:
            with self.subTest(mode=mode):
                codes = [v.code for v in gv_validate(Tfn(0.3, 0.2, 0.5), mode)]
                self.assertIn("CORNERS_NOT_SORTED", codes)

    def test_descending_tfn_is_lenient_only(self):
        value = Tfn(-0.05, -0.07, -0.07)
        self.assertEqual(gv_validate(value, ValidationMode.LENIENT), [])
        self.assertTrue(gv_validate(value, ValidationMode.STRICT))

    def test_intu_pair_sum_checked_in_strict_mode(self):
        value = IntuPair(0.7, 0.6)
        self.assertEqual(gv_validate(value, ValidationMode.LENIENT), [])
        codes = [v.code for v in gv_validate(value, ValidationMode.STRICT)]
        self.assertEqual(codes, ["MU_NU_SUM_EXCEEDS_ONE"])

    def test_out_of_range_hfe_member(self):
        codes = [v.code for v in gv_validate(Hfe.of(0.2, 1.2), ValidationMode.STRICT)]
        self.assertEqual(codes, ["OUT_OF_RANGE"])

    def test_empty_hfe_rejected(self):
        with self.assertRaises(GValueError) as ctx:
            Hfe(())
        self.assertEqual(ctx.exception.code, "EMPTY_HFE")


class ScoreTests(unittest.TestCase):
    def test_scores_per_variant(self):
        cases = [
            (Crisp(0.4), 0.4),
            (Tfn(0.5, 0.7, 0.7), 1.9 / 3),
            (Hfe.of(0.7, 0.8, 0.9), 0.8),
            (IntuPair(0.2, 0.5), 0.3),
        ]
        for value, expected in cases:
            with self.subTest(value=value):
                self.assertAlmostEqual(gv_score(value), expected, places=12)

    def test_compare_uses_tolerance(self):
        self.assertIs(gv_compare(Crisp(0.3), Crisp(0.3 + 1e-12)), Comparison.EQUIVALENT)
        self.assertIs(gv_compare(Crisp(0.4), Crisp(0.3)), Comparison.SUCCEEDS)
        self.assertIs(gv_compare(Crisp(0.2), Crisp(0.3)), Comparison.PRECEDES)

    def test_interval_is_degenerate_triangle(self):
        self.assertTrue(gv_equal(Tfn.from_interval(0.2, 0.6), Tfn(0.2, 0.4, 0.6)))

    def test_intu_pair_score_is_not_linear_under_scaling(self):
        # 1 - (1 - 0.8**0.5) - 0.5**0.5 = 0.1873, against 0.5 * 0.3
        scaled = gv_scale(0.5, IntuPair(0.2, 0.5))
        self.assertAlmostEqual(gv_score(scaled), 0.8944272 - 0.7071068, places=6)
        self.assertNotAlmostEqual(gv_score(scaled), 0.15, places=3)


if __name__ == "__main__":
    unittest.main()

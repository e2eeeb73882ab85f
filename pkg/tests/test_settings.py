import os
import unittest
from unittest import mock

from hohf_mcdm.config import defaults
from hohf_mcdm.models import CombinePolicy, IntuScaling, RhoSign, ValidationMode
from hohf_mcdm.services.settings import RuntimeSettings


class RuntimeSettingsTests(unittest.TestCase):
    def test_defaults_without_environment(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            settings = RuntimeSettings.load()
        self.assertFalse(settings.no_warn)
        self.assertEqual(settings.workers, defaults.DEFAULT_WORKERS)
        self.assertEqual(settings.log_level, "WARNING")
        self.assertIs(settings.arithmetic.intu_scaling, IntuScaling.EXAMPLE)
        self.assertIs(settings.arithmetic.rho_sign, RhoSign.MINUS)
        self.assertFalse(settings.arithmetic.hfe_cross_product)

    def test_reads_environment(self):
        env = {
            "HOHF_NO_WARN": "yes",
            "HOHF_WORKERS": "4",
            "HOHF_LOG_LEVEL": "debug",
            "HOHF_RHO_SIGN": "PLUS",
            "HOHF_INTU_SCALING": "printed",
            "HOHF_HFE_CROSS_PRODUCT": "1",
        }
        with mock.patch.dict(os.environ, env, clear=True):
            settings = RuntimeSettings.load()
        self.assertTrue(settings.no_warn)
        self.assertEqual(settings.workers, 4)
        self.assertEqual(settings.log_level, "DEBUG")
        self.assertIs(settings.arithmetic.rho_sign, RhoSign.PLUS)
        self.assertIs(settings.arithmetic.intu_scaling, IntuScaling.PRINTED)
        self.assertTrue(settings.arithmetic.hfe_cross_product)

    def test_invalid_values_fall_back_with_a_warning(self):
        env = {
            "HOHF_NO_WARN": "maybe",
            "HOHF_WORKERS": "0",
            "HOHF_LOG_LEVEL": "chatty",
            "HOHF_RHO_SIGN": "sideways",
        }
        with mock.patch.dict(os.environ, env, clear=True):
            with self.assertLogs("hohf_mcdm.services.settings", level="WARNING") as logs:
                settings = RuntimeSettings.load()
        self.assertFalse(settings.no_warn)
        self.assertEqual(settings.workers, defaults.DEFAULT_WORKERS)
        self.assertEqual(settings.log_level, defaults.DEFAULT_LOG_LEVEL)
        self.assertIs(settings.arithmetic.rho_sign, RhoSign.MINUS)
        self.assertEqual(len(logs.records), 4)

    def test_non_integer_workers(self):
        with mock.patch.dict(os.environ, {"HOHF_WORKERS": "many"}, clear=True):
            self.assertEqual(RuntimeSettings.load().workers, defaults.DEFAULT_WORKERS)


class ChoiceParsingTests(unittest.TestCase):
    def test_parse_accepts_values_and_names(self):
        self.assertIs(CombinePolicy.parse("strict-uniform"), CombinePolicy.STRICT_UNIFORM)
        self.assertIs(CombinePolicy.parse("STRICT_UNIFORM"), CombinePolicy.STRICT_UNIFORM)
        self.assertIs(ValidationMode.parse(ValidationMode.STRICT), ValidationMode.STRICT)
        with self.assertRaises(ValueError):
            ValidationMode.parse("sloppy")

    def test_error_lists_allowed_values(self):
        self.assertEqual(RhoSign.values(), {"minus", "plus"})
        with self.assertRaises(ValueError) as ctx:
            RhoSign.parse("times")
        self.assertIn("expected one of minus, plus", str(ctx.exception))


if __name__ == "__main__":
    unittest.main()

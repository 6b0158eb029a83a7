import math
import unittest

from scipy import special  # type: ignore

from cheapars.exc import InvalidParameter
from cheapars.special import gamma_cdf, gaussian_cdf, regularized_lower_gamma


class SpecialTest(unittest.TestCase):
    def test_gaussian_cdf(self):
        self.assertEqual(gaussian_cdf(0.0), 0.5)
        self.assertAlmostEqual(gaussian_cdf(1.0), special.ndtr(1.0))
        self.assertAlmostEqual(gaussian_cdf(-1.0, 0.5), special.ndtr(-math.sqrt(2.0)))

    def test_incomplete_gamma(self):
        for a in (0.5, 1.0, 2.0, 3.5, 10.0):
            for x in (1e-6, 0.1, 1.0, 2.5, 4.0, 11.0, 30.0):
                value = regularized_lower_gamma(a, x)
                expected = special.gammainc(a, x)
                assert abs(value - expected) < 1e-12, (a, x, value, expected)

    def test_edges(self):
        self.assertEqual(regularized_lower_gamma(2.0, 0.0), 0.0)
        self.assertEqual(regularized_lower_gamma(2.0, math.inf), 1.0)
        with self.assertRaises(InvalidParameter):
            regularized_lower_gamma(0.0, 1.0)
        with self.assertRaises(InvalidParameter):
            regularized_lower_gamma(1.0, -1.0)

    def test_exponential(self):
        # P(1, x) = 1 - exp(-x)
        for x in (0.5, 2.0, 7.0):
            self.assertAlmostEqual(regularized_lower_gamma(1.0, x), -math.expm1(-x))

    def test_gamma_cdf(self):
        self.assertEqual(gamma_cdf(-1.0, 2.0, 2.0), 0.0)
        # Gamma(2, 2): F(x) = 1 - (1 + x / 2) exp(-x / 2)
        for x in (0.3, 2.0, 9.0):
            expected = 1.0 - (1.0 + x / 2.0) * math.exp(-x / 2.0)
            self.assertAlmostEqual(gamma_cdf(x, 2.0, 2.0), expected)

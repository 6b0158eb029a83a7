import math
import unittest

from scipy import special  # type: ignore

from cheapars.exc import DomainError, InvalidParameter
from cheapars.sampler import EndpointsRule
from cheapars.targets import GammaTarget, make_gamma


class GammaTest(unittest.TestCase):
    def test_density(self):
        target = GammaTarget(2.0, 2.0)
        self.assertAlmostEqual(target.log_density(1.0), -0.5)
        self.assertAlmostEqual(target.log_density(2.0), math.log(2.0) - 1.0)
        self.assertAlmostEqual(target.log_density_derivative(1.0), 0.5)
        self.assertAlmostEqual(target.log_density_derivative(2.0), 0.0)
        # a^r Gamma(r) with r = a = 2
        self.assertAlmostEqual(target.normalizer, 4.0)

    def test_support(self):
        target = GammaTarget()
        assert not target.contains(0.0)
        assert target.contains(1e-300)
        with self.assertRaises(DomainError):
            target.log_density(0.0)
        with self.assertRaises(DomainError):
            target.log_density_derivative(-1.0)

    def test_cdf(self):
        target = GammaTarget(2.0, 2.0)
        self.assertEqual(target.cdf(0.0), 0.0)
        self.assertEqual(target.cdf(-3.0), 0.0)
        for x in (0.1, 1.0, 4.0, 12.0):
            self.assertAlmostEqual(target.cdf(x), special.gammainc(2.0, x / 2.0))

    def test_invalid(self):
        with self.assertRaises(InvalidParameter):
            GammaTarget(1.0, 2.0)
        with self.assertRaises(InvalidParameter):
            GammaTarget(2.0, 0.0)

    def test_initial_rule(self):
        rule = make_gamma().default_initial_rule(4)
        assert rule == EndpointsRule(0.01, 4.0, 4), rule

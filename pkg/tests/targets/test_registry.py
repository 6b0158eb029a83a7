import unittest

from cheapars.exc import InvalidParameter
from cheapars.targets import registry, GaussianTarget, GammaTarget


class RegistryTest(unittest.TestCase):
    def test_registry(self):
        assert registry.gaussian == registry.get("gaussian")
        assert registry.get("banana") is None
        assert registry.get(GammaTarget) == GammaTarget
        assert registry.names == ["gamma", "gaussian"]

    def test_make(self):
        target = registry.make("gaussian", {"sigma2": 2.0})
        assert isinstance(target, GaussianTarget)
        assert target.sigma2 == 2.0
        target = registry.make("gamma", r=3.0, a=None)
        assert target.r == 3.0
        assert target.a == 2.0

    def test_make_invalid(self):
        with self.assertRaises(InvalidParameter):
            registry.make("banana")
        with self.assertRaises(InvalidParameter):
            registry.make("gaussian", {"shape": 2.0})
        with self.assertRaises(InvalidParameter):
            registry.make("gamma", {"r": 0.5})

from cheapars.targets.registry import Registry
from cheapars.targets.common import LogConcaveTarget
from cheapars.targets.common import check_concavity, check_derivative
from cheapars.targets.gaussian import GaussianTarget, GaussianTargetParams
from cheapars.targets.gaussian import make_gaussian
from cheapars.targets.gamma import GammaTarget, GammaTargetParams, make_gamma

registry = Registry()
registry.add(GaussianTarget)
registry.add(GammaTarget)

__all__ = [
    "registry",
    "LogConcaveTarget",
    "GaussianTarget",
    "GaussianTargetParams",
    "GammaTarget",
    "GammaTargetParams",
    "make_gaussian",
    "make_gamma",
    "check_concavity",
    "check_derivative",
]

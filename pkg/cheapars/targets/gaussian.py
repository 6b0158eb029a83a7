import math
from typing import NamedTuple

from cheapars.targets.common import LogConcaveTarget
from cheapars.exc import DomainError, InvalidParameter

# Initial nodes of a Gaussian experiment are drawn uniformly in this window.
INITIAL_WINDOW = 2.0


class GaussianTargetParams(NamedTuple):
    sigma2: float = 0.5


class GaussianTarget(LogConcaveTarget):
    """Zero-mean Gaussian, V(x) = -x^2 / (2 sigma2) on the real line."""

    name = "gaussian"
    label = "Gaussian"

    def __init__(self, sigma2: float = 0.5):
        sigma2 = float(sigma2)
        if not sigma2 > 0.0 or not math.isfinite(sigma2):
            raise InvalidParameter("Gaussian variance must be positive: %r" % sigma2)
        self.sigma2 = sigma2
        log_normalizer = 0.5 * math.log(2 * math.pi * sigma2)
        super(GaussianTarget, self).__init__(known_log_normalizer=log_normalizer)
        self._scale = 1.0 / sigma2

    def log_density(self, x: float) -> float:
        if not -math.inf < x < math.inf:
            raise DomainError("Outside support of %r: %r" % (self, x))
        return -0.5 * x * x * self._scale

    def log_density_derivative(self, x: float) -> float:
        if not -math.inf < x < math.inf:
            raise DomainError("Outside support of %r: %r" % (self, x))
        return -x * self._scale

    def cdf(self, x: float) -> float:
        from cheapars.special import gaussian_cdf

        return gaussian_cdf(x, self.sigma2)

    def default_initial_rule(self, count: int):
        from cheapars.sampler import WindowRule

        return WindowRule(-INITIAL_WINDOW, INITIAL_WINDOW, count)

    @property
    def params(self):
        return {"sigma2": self.sigma2}


def make_gaussian(params: GaussianTargetParams = GaussianTargetParams()):
    return GaussianTarget(sigma2=params.sigma2)

import math
from typing import NamedTuple

from cheapars.targets.common import LogConcaveTarget
from cheapars.exc import DomainError, InvalidParameter

# First and last initial node of a Gamma experiment.
INITIAL_LOWER = 0.01
INITIAL_UPPER = 4.0


class GammaTargetParams(NamedTuple):
    r: float = 2.0
    a: float = 2.0


class GammaTarget(LogConcaveTarget):
    """Gamma density with shape r and scale a on (0, inf):
    V(x) = (r - 1) log x - x / a. Log-concave only for r > 1, since the
    tangent at the left tail must bound the pole of log x."""

    name = "gamma"
    label = "Gamma"

    def __init__(self, r: float = 2.0, a: float = 2.0):
        r, a = float(r), float(a)
        if not r > 1.0 or not math.isfinite(r):
            raise InvalidParameter("Gamma shape must be greater than 1: %r" % r)
        if not a > 0.0 or not math.isfinite(a):
            raise InvalidParameter("Gamma scale must be positive: %r" % a)
        self.r = r
        self.a = a
        log_normalizer = r * math.log(a) + math.lgamma(r)
        super(GammaTarget, self).__init__(
            support_lower=0.0, known_log_normalizer=log_normalizer
        )
        self._power = r - 1.0
        self._rate = 1.0 / a

    def log_density(self, x: float) -> float:
        if not 0.0 < x < math.inf:
            raise DomainError("Outside support of %r: %r" % (self, x))
        return self._power * math.log(x) - x * self._rate

    def log_density_derivative(self, x: float) -> float:
        if not 0.0 < x < math.inf:
            raise DomainError("Outside support of %r: %r" % (self, x))
        return self._power / x - self._rate

    def cdf(self, x: float) -> float:
        from cheapars.special import gamma_cdf

        return gamma_cdf(x, self.r, self.a)

    def default_initial_rule(self, count: int):
        from cheapars.sampler import EndpointsRule

        return EndpointsRule(INITIAL_LOWER, INITIAL_UPPER, count)

    @property
    def params(self):
        return {"r": self.r, "a": self.a}


def make_gamma(params: GammaTargetParams = GammaTargetParams()):
    return GammaTarget(r=params.r, a=params.a)

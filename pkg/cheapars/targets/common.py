import math
import logging
from typing import Any, Callable, Dict, Optional

import numpy

from cheapars.exc import DomainError, InvalidParameter

log = logging.getLogger(__name__)

# Half-width of the window used to check unbounded sides of a support.
CHECK_WINDOW = 10.0


class LogConcaveTarget(object):
    """An unnormalized density exp(V(x)) with concave V on an interval.

    Custom targets pass V and V' as callables; the built-in families
    subclass this and override the two evaluation methods. The optional
    normalizer is only used by diagnostics, never by the samplers."""

    name: Optional[str] = None
    label: Optional[str] = None

    def __init__(
        self,
        log_density: Optional[Callable[[float], float]] = None,
        log_density_derivative: Optional[Callable[[float], float]] = None,
        support_lower: float = -math.inf,
        support_upper: float = math.inf,
        known_log_normalizer: Optional[float] = None,
        debug: bool = False,
    ):
        if not support_lower < support_upper:
            msg = "Empty support: (%s, %s)" % (support_lower, support_upper)
            raise InvalidParameter(msg)
        if type(self) is LogConcaveTarget:
            if log_density is None or log_density_derivative is None:
                msg = "Custom targets need a log-density and its derivative"
                raise InvalidParameter(msg)
        self._log_density = log_density
        self._log_density_derivative = log_density_derivative
        self.support_lower = float(support_lower)
        self.support_upper = float(support_upper)
        self.known_log_normalizer = known_log_normalizer
        if debug:
            rng = numpy.random.default_rng(0)
            if not check_concavity(self, rng):
                raise InvalidParameter("Log-density is not concave: %r" % self)
            if not check_derivative(self, rng):
                raise InvalidParameter("Derivative does not match: %r" % self)

    def contains(self, x: float) -> bool:
        return self.support_lower < x < self.support_upper

    def log_density(self, x: float) -> float:
        if not self.support_lower < x < self.support_upper:
            raise DomainError("Outside support of %r: %r" % (self, x))
        if self._log_density is None:
            raise NotImplementedError()
        return self._log_density(x)

    def log_density_derivative(self, x: float) -> float:
        if not self.support_lower < x < self.support_upper:
            raise DomainError("Outside support of %r: %r" % (self, x))
        if self._log_density_derivative is None:
            raise NotImplementedError()
        return self._log_density_derivative(x)

    def cdf(self, x: float) -> Optional[float]:
        """Normalized distribution function, if known analytically."""
        return None

    @property
    def normalizer(self) -> Optional[float]:
        if self.known_log_normalizer is None:
            return None
        return math.exp(self.known_log_normalizer)

    @property
    def params(self) -> Dict[str, Any]:
        return {}

    def default_initial_rule(self, count: int):
        """Initial node protocol used for this target in experiments."""
        from cheapars.sampler import WindowRule

        lo, hi = self.check_window()
        return WindowRule(lo, hi, count)

    def check_window(self):
        """A finite interval inside the support for numerical probing."""
        lower, upper = self.support_lower, self.support_upper
        if math.isfinite(lower) and math.isfinite(upper):
            return (lower, upper)
        if math.isfinite(lower):
            return (lower, lower + 2 * CHECK_WINDOW)
        if math.isfinite(upper):
            return (upper - 2 * CHECK_WINDOW, upper)
        return (-CHECK_WINDOW, CHECK_WINDOW)

    def to_dict(self):
        data: Dict[str, Any] = {
            "support": [self.support_lower, self.support_upper],
        }
        if self.name is not None:
            data["name"] = self.name
            data["label"] = self.label
        if self.known_log_normalizer is not None:
            data["log_normalizer"] = self.known_log_normalizer
        data.update(self.params)
        return data

    def __str__(self):
        return self.name or "custom"

    def __repr__(self):
        params = ", ".join("%s=%r" % item for item in sorted(self.params.items()))
        return "<%s(%s)>" % (type(self).__name__, params)


def _interior(rng, lower, upper):
    x = rng.uniform(lower, upper)
    while not lower < x < upper:
        x = rng.uniform(lower, upper)
    return float(x)


def check_concavity(target, rng, trials=1000, slack=1e-9):
    """Chord test on random ordered triples a < b < c: V(b) must lie above
    the chord between (a, V(a)) and (c, V(c))."""
    lower, upper = target.check_window()
    for _ in range(trials):
        a, b, c = sorted(_interior(rng, lower, upper) for _ in range(3))
        if not a < b < c:
            continue
        va = target.log_density(a)
        vb = target.log_density(b)
        vc = target.log_density(c)
        chord = ((c - b) * va + (b - a) * vc) / (c - a)
        if vb < chord - slack:
            log.debug("Chord test failed at (%r, %r, %r)", a, b, c)
            return False
    return True


def check_derivative(target, rng, points=100, rtol=1e-5, step=1e-6):
    """Compare V' with a central finite difference of V."""
    lower, upper = target.check_window()
    for _ in range(points):
        x = _interior(rng, lower + step * 10, upper - step * 10)
        h = step * max(abs(x), 1e-3)
        if not (target.contains(x - h) and target.contains(x + h)):
            continue
        numeric = (target.log_density(x + h) - target.log_density(x - h)) / (2 * h)
        exact = target.log_density_derivative(x)
        scale = max(abs(exact), abs(numeric), 1.0)
        if abs(numeric - exact) > rtol * scale:
            log.debug("Derivative mismatch at %r: %r != %r", x, numeric, exact)
            return False
    return True

import math
import logging
from typing import NamedTuple, Optional

import numpy
from scipy import integrate, stats  # type: ignore

from cheapars.exc import DiagnosticFailure, DiagnosticUnavailable, InvalidParameter

log = logging.getLogger(__name__)

# Floor for the envelope-minus-target integrand before it counts as a bug.
INTEGRAND_SLACK = 1e-12
QUADRATURE_TOLERANCE = 1e-8


class DiagnosticsReport(NamedTuple):
    eta_empirical: float
    eta_exact: Optional[float] = None
    l1_distance: Optional[float] = None
    ks_statistic: Optional[float] = None
    log_normalizer: Optional[float] = None

    HEADER = (
        "eta_exact",
        "eta_empirical",
        "l1_distance",
        "ks_statistic",
        "log_normalizer",
    )

    def to_row(self):
        return [getattr(self, name) for name in self.HEADER]


def exact_acceptance_rate(env, target) -> float:
    """Acceptance rate c_pi / c_t of rejection sampling with the envelope."""
    if target.known_log_normalizer is None:
        raise DiagnosticUnavailable("Target has no known normalizer: %r" % target)
    return math.exp(target.known_log_normalizer - env.log_normalizer)


def l1_distance(env, target, quadrature: bool = False) -> float:
    """Integral of |q_t - pi|. Since the envelope dominates the target this
    is c_t - c_pi; without a known normalizer (or when asked) it is
    integrated numerically piece by piece."""
    if target.known_log_normalizer is not None and not quadrature:
        return math.exp(env.log_normalizer) - math.exp(target.known_log_normalizer)
    return _integrate_gap(env, target)


def _integrate_gap(env, target):
    scale = math.exp(env.log_normalizer)
    lowest = [0.0]

    total = 0.0
    for piece in env.pieces:

        def gap(x, piece=piece):
            hull = math.exp(piece.log_offset + piece.slope * x)
            value = hull - math.exp(target.log_density(x))
            if value < lowest[0]:
                lowest[0] = value
            return abs(value)

        left = max(piece.left, target.support_lower)
        right = min(piece.right, target.support_upper)
        if not right > left:
            continue
        result = integrate.quad(
            gap,
            left,
            right,
            epsabs=QUADRATURE_TOLERANCE * scale,
            epsrel=QUADRATURE_TOLERANCE,
            limit=200,
            full_output=1,
        )
        if len(result) > 3:
            raise DiagnosticFailure("Quadrature did not converge: %s" % result[3])
        total += result[0]
    if lowest[0] < -INTEGRAND_SLACK * max(1.0, scale):
        msg = "Envelope falls below the target by %g" % -lowest[0]
        raise DiagnosticFailure(msg)
    return total


def ks_statistic(samples, target_cdf) -> float:
    """Kolmogorov-Smirnov distance between the empirical distribution of
    the samples and the given distribution function."""
    values = numpy.asarray(samples, dtype=float)
    if values.size == 0:
        raise InvalidParameter("Cannot compute a KS statistic without samples")

    def cdf(xs):
        return numpy.array([target_cdf(float(x)) for x in xs])

    result = stats.kstest(values, cdf)
    return float(result[0])


def report(env, target, samples=None, iterations=None, accepted=None):
    """Collect all diagnostics that the inputs allow."""
    eta_empirical = math.nan
    if iterations:
        eta_empirical = (accepted or 0) / iterations
    eta_exact = None
    if target.known_log_normalizer is not None:
        eta_exact = exact_acceptance_rate(env, target)
    try:
        distance = l1_distance(env, target)
    except DiagnosticFailure as exc:
        log.warning("No L1 distance for %r: %s", target, exc)
        distance = None
    ks = None
    if samples is not None and len(samples) and target.cdf(0.0) is not None:
        ks = ks_statistic(samples, target.cdf)
    return DiagnosticsReport(
        eta_empirical=eta_empirical,
        eta_exact=eta_exact,
        l1_distance=distance,
        ks_statistic=ks,
        log_normalizer=env.log_normalizer,
    )

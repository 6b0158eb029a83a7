"""
Distribution functions of the built-in targets.

The regularized lower incomplete gamma function follows the classic
two-branch evaluation: a power series converges quickly for x < a + 1,
and a modified Lentz continued fraction for the upper function is used
otherwise.
"""
import sys
import math

from cheapars.exc import DiagnosticFailure, InvalidParameter

ACCURACY = 1e-14
MAX_ITERATION = 500
TINY = sys.float_info.min / sys.float_info.epsilon


def gaussian_cdf(x, sigma2=1.0):
    if x == math.inf:
        return 1.0
    if x == -math.inf:
        return 0.0
    return 0.5 * math.erfc(-x / math.sqrt(2.0 * sigma2))


def regularized_lower_gamma(a, x, accuracy=ACCURACY, max_iteration=MAX_ITERATION):
    """P(a, x) = gamma(a, x) / Gamma(a)."""
    if not a > 0.0:
        raise InvalidParameter("non-positive a is not allowed: %r" % a)
    if x < 0.0 or math.isnan(x):
        raise InvalidParameter("negative x is not allowed: %r" % x)
    if x == 0.0:
        return 0.0
    if x == math.inf:
        return 1.0
    if x < a + 1.0:
        return _lower_series(a, x, accuracy, max_iteration)
    return 1.0 - _upper_continued_fraction(a, x, accuracy, max_iteration)


def _prefactor(a, x):
    return math.exp(-x + a * math.log(x) - math.lgamma(a))


def _lower_series(a, x, accuracy, max_iteration):
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(max_iteration):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * accuracy:
            return total * _prefactor(a, x)
    raise DiagnosticFailure("Incomplete gamma series did not converge")


def _upper_continued_fraction(a, x, accuracy, max_iteration):
    b = x + 1.0 - a
    c = 1.0 / TINY
    d = 1.0 / b
    h = d
    for i in range(1, max_iteration + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < TINY:
            d = TINY
        c = b + an / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < accuracy:
            return _prefactor(a, x) * h
    raise DiagnosticFailure("Incomplete gamma continued fraction did not converge")


def gamma_cdf(x, r, a):
    """Distribution function of the Gamma law with shape r and scale a."""
    if x <= 0.0:
        return 0.0
    return regularized_lower_gamma(r, x / a)

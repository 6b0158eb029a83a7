import os
import math
import logging
from banal import ensure_list
from normality import stringify

log = logging.getLogger(__name__)

# Half-width below which an exponential piece is treated as flat.
FLAT_EPSILON = 1e-12


def get_env_int(name, default=None):
    value = stringify(os.environ.get(name))
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        log.warning("Ignoring non-integer value for %s: %r", name, value)
        return default


def log_sum_exp(values):
    """Compute log(sum(exp(values))) without overflowing. Entries may be
    -inf; an empty or all -inf input gives -inf."""
    peak = -math.inf
    for value in values:
        if value > peak:
            peak = value
    if peak == -math.inf:
        return -math.inf
    if peak == math.inf:
        return math.inf
    total = 0.0
    for value in values:
        total += math.exp(value - peak)
    return peak + math.log(total)


def log_interval_area(offset, slope, left, right):
    """Logarithm of the integral of exp(offset + slope * x) between left
    and right. Endpoints may be infinite as long as the integral is finite;
    an infinite integral returns +inf and an empty interval -inf."""
    if not right > left:
        return -math.inf
    width = right - left
    if slope == 0.0 or (math.isfinite(width) and abs(slope * width) < FLAT_EPSILON):
        if not math.isfinite(width):
            return math.inf
        middle = offset + slope * (left + 0.5 * width)
        return middle + math.log(width)
    if slope > 0.0:
        if right == math.inf:
            return math.inf
        return (
            offset
            + slope * right
            + math.log(-math.expm1(slope * (left - right)))
            - math.log(slope)
        )
    if left == -math.inf:
        return math.inf
    return (
        offset
        + slope * left
        + math.log(-math.expm1(slope * (right - left)))
        - math.log(-slope)
    )


def parse_floats(value):
    """Turn "1, 2.5" or [1, "2.5"] or 3 into a list of floats."""
    values = []
    for item in ensure_list(value):
        text = stringify(item)
        if text is None:
            continue
        for part in text.split(","):
            part = part.strip()
            if len(part):
                values.append(float(part))
    return values


def parse_ints(value):
    values = []
    for item in parse_floats(value):
        if item != int(item):
            raise ValueError("Not an integer: %r" % item)
        values.append(int(item))
    return values

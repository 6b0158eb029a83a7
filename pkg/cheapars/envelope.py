"""
Piecewise-exponential envelopes of log-concave targets.

Given sorted nodes s_1 < ... < s_m, the tangent lines w_i of V at each node
are intersected pairwise to form the upper hull W = min(w_1, ..., w_m). The
proposal q = exp(W) is a sequence of exponential pieces whose areas are
known in closed form, so it can be normalized and sampled exactly: pick a
piece by its share of the total area, then invert the truncated
exponential distribution inside it.

All areas are kept in log space. Envelopes and support sets are immutable;
adapting a sampler means building a new envelope.
"""
import math
import logging
from bisect import bisect_left, bisect_right
from typing import Iterable, List, NamedTuple, Sequence

import numpy

from cheapars.exc import DegenerateNodes, DomainError, ImproperProposal
from cheapars.util import FLAT_EPSILON, log_interval_area, log_sum_exp

log = logging.getLogger(__name__)

# Candidate nodes closer than this to an existing node are not inserted.
DEDUP_EPSILON = 1e-9
# Consecutive tangents with slopes closer than this are parallel.
SLOPE_EPSILON = 1e-12
# Relative tolerance for two parallel tangents to count as the same line.
LINE_EPSILON = 1e-12


class SupportSet(object):
    """Sorted, distinct node abscissas of an envelope."""

    __slots__ = ("nodes",)

    def __init__(self, nodes: Iterable[float]):
        nodes = sorted(float(n) for n in nodes)
        if len(nodes) < 2:
            raise DegenerateNodes("At least two nodes are required: %r" % nodes)
        for node in nodes:
            if not math.isfinite(node):
                raise DegenerateNodes("Nodes must be finite: %r" % nodes)
        for left, right in zip(nodes, nodes[1:]):
            if not right - left > DEDUP_EPSILON:
                raise DegenerateNodes("Nodes are not distinct: %r" % nodes)
        self.nodes = tuple(nodes)

    def closest(self, x: float) -> int:
        """Index of the node nearest to x; ties go to the smaller node."""
        nodes = self.nodes
        index = bisect_left(nodes, x)
        if index == 0:
            return 0
        if index == len(nodes):
            return index - 1
        if x - nodes[index - 1] <= nodes[index] - x:
            return index - 1
        return index

    def is_duplicate(self, x: float) -> bool:
        index = self.closest(x)
        return abs(self.nodes[index] - x) <= DEDUP_EPSILON

    def insert(self, x: float) -> "SupportSet":
        """Add a node. Returns this set if x collides with a node."""
        if self.is_duplicate(x):
            return self
        nodes = list(self.nodes)
        nodes.insert(bisect_left(nodes, x), float(x))
        return SupportSet(nodes)

    def swap(self, index: int, x: float) -> "SupportSet":
        """Replace the node at index by x."""
        nodes = list(self.nodes)
        nodes.pop(index)
        nodes.append(float(x))
        return SupportSet(nodes)

    def to_list(self) -> List[float]:
        return list(self.nodes)

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, index):
        return self.nodes[index]

    def __eq__(self, other):
        if isinstance(other, SupportSet):
            other = other.nodes
        return self.nodes == tuple(other)

    def __hash__(self):
        return hash(self.nodes)

    def __repr__(self):
        return "<SupportSet(%s)>" % ", ".join("%.6g" % n for n in self.nodes)


class Piece(NamedTuple):
    """One exponential segment exp(log_offset + slope * x) on (left, right]."""

    slope: float
    log_offset: float
    left: float
    right: float
    log_area: float

    def log_eval(self, x: float) -> float:
        return self.log_offset + self.slope * x


def check_proper(target, nodes: Sequence[float]):
    """Raise ImproperProposal if an unbounded tail of the hull built on
    these nodes would have infinite area."""
    if target.support_lower == -math.inf:
        if not target.log_density_derivative(nodes[0]) > 0.0:
            raise ImproperProposal("Left tail is improper at node %r" % nodes[0])
    if target.support_upper == math.inf:
        if not target.log_density_derivative(nodes[-1]) < 0.0:
            raise ImproperProposal("Right tail is improper at node %r" % nodes[-1])


def is_proper(target, nodes: Sequence[float]) -> bool:
    try:
        check_proper(target, nodes)
        return True
    except ImproperProposal:
        return False


class Envelope(object):
    """The upper hull of a target built on a support set, together with
    the normalized piece weights used for sampling from it."""

    def __init__(self, target, nodes, slopes, offsets, breaks, log_areas):
        self.target = target
        self.nodes = nodes
        self.slopes = slopes
        self.offsets = offsets
        self.breaks = breaks
        self.log_areas = log_areas
        self.log_normalizer = log_sum_exp(log_areas)
        if not math.isfinite(self.log_normalizer):
            raise ImproperProposal("Envelope has no finite area: %r" % nodes)
        cumulative = []
        total = 0.0
        for log_area in log_areas:
            total += math.exp(log_area - self.log_normalizer)
            cumulative.append(total)
        # Pin the last entry so that every u in [0, 1) finds a piece.
        cumulative[-1] = 1.0
        self.cumulative_weights = cumulative

    @classmethod
    def with_nodes(cls, target, nodes):
        if not isinstance(nodes, SupportSet):
            nodes = SupportSet(nodes)
        return build_envelope(target, nodes)

    @property
    def pieces(self) -> List[Piece]:
        pieces = []
        for i, log_area in enumerate(self.log_areas):
            left, right = self.breaks[i], self.breaks[i + 1]
            pieces.append(Piece(self.slopes[i], self.offsets[i], left, right, log_area))
        return pieces

    @property
    def normalizer(self) -> float:
        return math.exp(self.log_normalizer)

    @property
    def weights(self) -> List[float]:
        return [math.exp(a - self.log_normalizer) for a in self.log_areas]

    def find_piece(self, x: float) -> int:
        """Index j of the piece with breaks[j] < x <= breaks[j + 1]."""
        return bisect_left(self.breaks, x, 1, len(self.log_areas)) - 1

    def log_eval(self, x: float) -> float:
        if not self.target.support_lower < x < self.target.support_upper:
            raise DomainError("Outside support of %r: %r" % (self.target, x))
        j = self.find_piece(x)
        return self.offsets[j] + self.slopes[j] * x

    def log_eval_many(self, xs) -> numpy.ndarray:
        """Vectorised W over an array of points inside the support."""
        xs = numpy.asarray(xs, dtype=float)
        inner = numpy.asarray(self.breaks[1:-1], dtype=float)
        index = numpy.searchsorted(inner, xs, side="left")
        slopes = numpy.asarray(self.slopes)[index]
        offsets = numpy.asarray(self.offsets)[index]
        return offsets + slopes * xs

    def select(self, u: float) -> int:
        """Smallest piece index j with cumulative_weights[j] > u."""
        index = bisect_right(self.cumulative_weights, u)
        return min(index, len(self.cumulative_weights) - 1)

    def draw(self, rng):
        """Sample x from the normalized envelope. Returns x and the index
        of the piece it was drawn from."""
        j = self.select(rng.random())
        u = rng.random()
        while u == 0.0:
            u = rng.random()
        left, right = self.breaks[j], self.breaks[j + 1]
        x = _sample_exponential(self.slopes[j], left, right, u)
        if x >= self.target.support_upper:
            x = float(numpy.nextafter(right, left))
        return x, j

    def sample(self, rng) -> float:
        x, _ = self.draw(rng)
        return x

    def cdf(self, x: float) -> float:
        """Distribution function of the normalized envelope."""
        if x <= self.breaks[0]:
            return 0.0
        if x >= self.breaks[-1]:
            return 1.0
        j = self.find_piece(x)
        below = self.cumulative_weights[j - 1] if j > 0 else 0.0
        partial = log_interval_area(self.offsets[j], self.slopes[j], self.breaks[j], x)
        return min(1.0, below + math.exp(partial - self.log_normalizer))

    def dump(self):
        """Piece records: index, slope, log_offset, left, right, log_area."""
        return [(i,) + tuple(piece) for i, piece in enumerate(self.pieces)]

    def __len__(self):
        return len(self.log_areas)

    def __repr__(self):
        return "<Envelope(%d pieces, log_normalizer=%.6f)>" % (
            len(self),
            self.log_normalizer,
        )


def _tangents(target, nodes):
    """Tangent lines at the nodes, dropping nodes whose tangent coincides
    with the previous one."""
    kept, slopes, offsets = [], [], []
    for node in nodes:
        value = target.log_density(node)
        slope = target.log_density_derivative(node)
        offset = value - node * slope
        if len(kept) and abs(slope - slopes[-1]) < SLOPE_EPSILON:
            scale = max(1.0, abs(offset), abs(offsets[-1]))
            if abs(offset - offsets[-1]) <= LINE_EPSILON * scale:
                log.debug("Dropping node with repeated tangent: %r", node)
                continue
            msg = "Parallel tangents at %r and %r" % (kept[-1], node)
            raise DegenerateNodes(msg)
        slopes.append(slope)
        offsets.append(offset)
        kept.append(node)
    return kept, slopes, offsets


def build_envelope(target, nodes: SupportSet) -> Envelope:
    """Build the hull min(w_1, ..., w_m) of the tangents at the nodes."""
    if not isinstance(nodes, SupportSet):
        nodes = SupportSet(nodes)
    check_proper(target, nodes.nodes)
    kept, slopes, offsets = _tangents(target, nodes.nodes)
    breaks = [target.support_lower]
    for i in range(len(slopes) - 1):
        lo, hi = kept[i], kept[i + 1]
        delta = slopes[i] - slopes[i + 1]
        edge = (offsets[i + 1] - offsets[i]) / delta
        if not lo <= edge <= hi:
            # Only reachable through rounding with near-parallel tangents.
            log.debug("Clamping breakpoint %r into (%r, %r)", edge, lo, hi)
            edge = 0.5 * (lo + hi)
        breaks.append(edge)
    breaks.append(target.support_upper)
    log_areas = []
    for i, slope in enumerate(slopes):
        log_area = log_interval_area(offsets[i], slope, breaks[i], breaks[i + 1])
        if log_area == math.inf or math.isnan(log_area):
            raise ImproperProposal("Piece %d has infinite area" % i)
        log_areas.append(log_area)
    return Envelope(target, nodes, slopes, offsets, breaks, log_areas)


def _sample_exponential(slope, left, right, u):
    """Invert the distribution of exp(slope * x) truncated to (left, right]
    for u in (0, 1)."""
    width = right - left
    if slope == 0.0 or (math.isfinite(width) and abs(slope * width) < FLAT_EPSILON):
        if not math.isfinite(width):
            raise ImproperProposal("Flat piece on an unbounded interval")
        x = left + u * width
    elif slope > 0.0:
        if right == math.inf:
            raise ImproperProposal("Rising piece on an unbounded right tail")
        x = right + math.log1p((1.0 - u) * math.expm1(-slope * width)) / slope
    else:
        if left == -math.inf:
            raise ImproperProposal("Falling piece on an unbounded left tail")
        x = left + math.log1p(u * math.expm1(slope * width)) / slope
    if x > right:
        x = right
    if x <= left:
        x = float(numpy.nextafter(left, right))
    return x


def envelope_log_eval(env: Envelope, x: float) -> float:
    return env.log_eval(x)


def envelope_log_normalizer(env: Envelope) -> float:
    return env.log_normalizer


def select_piece(env: Envelope, u: float) -> int:
    return env.select(u)


def sample_piece(piece: Piece, u: float) -> float:
    return _sample_exponential(piece.slope, piece.left, piece.right, u)


def sample_envelope(env: Envelope, rng) -> float:
    return env.sample(rng)


def envelope_cdf(env: Envelope, x: float) -> float:
    return env.cdf(x)


def envelope_dump(env: Envelope):
    return env.dump()

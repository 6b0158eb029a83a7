"""
Adaptive rejection samplers.

Both samplers draw a candidate from the current envelope and accept it
with probability exp(V(x) - W(x)). They differ in what a rejection does:

* ARS adds the rejected point to the support set, so the hull keeps
  growing and converges to the target.
* CARS keeps exactly M nodes. The rejected point replaces its closest node
  only when the resulting envelope has a strictly smaller normalizer.

Adaptation only ever looks at rejected points, so accepted samples are
exact draws from the target.
"""
import math
import time
import logging
from typing import Callable, List, NamedTuple, Optional

import numpy

from cheapars.envelope import SupportSet, build_envelope, is_proper
from cheapars.envelope import DEDUP_EPSILON
from cheapars.exc import DegenerateNodes, ImproperProposal
from cheapars.exc import InitializationError, InvalidParameter

log = logging.getLogger(__name__)

ARS = "ars"
CARS = "cars"
METHODS = (ARS, CARS)
MAX_INITIAL_DRAWS = 1000
WINDOW_RULES = ("window", "uniform", "uniform-window")
ENDPOINTS_RULES = ("endpoints", "fixed-endpoints")
RULE_KINDS = WINDOW_RULES + ENDPOINTS_RULES


class StepOutcome(NamedTuple):
    sample: float
    accepted: bool
    swap_attempted: bool = False
    swap_accepted: bool = False
    log_normalizer_after: float = math.nan
    node_added: bool = False


class RunStats(NamedTuple):
    """Summary of one run: the final acceptance rate is exact (c_pi / c_T)
    when the target knows its normalizer, empirical otherwise."""

    method: str
    accepted: int
    iterations: int
    final_nodes: int
    eta_final: float
    eta_empirical: float
    log_normalizer: float
    elapsed: float

    def to_dict(self):
        return self._asdict()


class WindowRule(NamedTuple):
    """Draw all initial nodes uniformly inside [lo, hi]."""

    lo: float
    hi: float
    count: int

    def draw(self, rng):
        return [float(x) for x in rng.uniform(self.lo, self.hi, self.count)]


class EndpointsRule(NamedTuple):
    """Fix the first and last initial node at lo and hi, draw the others
    uniformly in between."""

    lo: float
    hi: float
    count: int

    def draw(self, rng):
        inner = rng.uniform(self.lo, self.hi, max(0, self.count - 2))
        return [self.lo] + [float(x) for x in inner] + [self.hi]


def make_rule(kind, lo, hi, count):
    if kind in WINDOW_RULES:
        return WindowRule(float(lo), float(hi), int(count))
    if kind in ENDPOINTS_RULES:
        return EndpointsRule(float(lo), float(hi), int(count))
    raise InvalidParameter("Unknown initial node rule: %r" % kind)


def initial_support(target, rule, rng) -> SupportSet:
    """Draw an initial support set from the rule, redrawing until the set
    is inside the support, distinct and yields a proper proposal."""
    if rule.count < 2:
        raise InvalidParameter("At least two initial nodes are needed: %r" % (rule,))
    if not rule.lo < rule.hi:
        raise InvalidParameter("Empty initial window: %r" % (rule,))
    for attempt in range(MAX_INITIAL_DRAWS):
        nodes = rule.draw(rng)
        if not all(target.contains(n) for n in nodes):
            continue
        try:
            support = SupportSet(nodes)
        except DegenerateNodes:
            continue
        if is_proper(target, support.nodes):
            if attempt > 0:
                log.debug("Initial support after %d redraws: %r", attempt, support)
            return support
    msg = "No proper initial support for %r from %r" % (target, rule)
    raise InitializationError(msg)


class SamplerState(object):
    """Mutable state of one ARS or CARS chain: the support set, the
    envelope built on it, the counters and the random source.

    With ``rebuild_each_step`` the proposal is rebuilt from the support at
    the start of every iteration, as in the literal algorithm tables; by
    default an envelope is reused until the support changes."""

    def __init__(
        self,
        target,
        method: str,
        support,
        seed=None,
        rng=None,
        node_budget: Optional[int] = None,
        rebuild_each_step: bool = False,
    ):
        method = str(method).lower()
        if method not in METHODS:
            raise InvalidParameter("Unknown method: %r" % method)
        if not isinstance(support, SupportSet):
            support = SupportSet(support)
        self.target = target
        self.method = method
        self.support = support
        self.envelope = build_envelope(target, support)
        self.iteration_count = 0
        self.accepted_count = 0
        self.seed = seed
        self.rng = rng if rng is not None else numpy.random.default_rng(seed)
        self.rebuild_each_step = rebuild_each_step
        self.node_budget = None
        if method == CARS:
            self.node_budget = node_budget or len(support)
            if self.node_budget != len(support):
                msg = "Support has %d nodes, budget is %d"
                raise InvalidParameter(msg % (len(support), self.node_budget))

    @classmethod
    def create(cls, target, method, nodes, seed=None, rule=None, **kwargs):
        """Start a chain from explicit nodes, or from a node count drawn
        with the rule (or the target's default protocol)."""
        rng = numpy.random.default_rng(seed)
        if isinstance(nodes, int):
            rule = rule or target.default_initial_rule(nodes)
            nodes = initial_support(target, rule, rng)
        return cls(target, method, nodes, seed=seed, rng=rng, **kwargs)

    @property
    def log_normalizer(self) -> float:
        return self.envelope.log_normalizer

    @property
    def eta_exact(self) -> Optional[float]:
        if self.target.known_log_normalizer is None:
            return None
        return math.exp(self.target.known_log_normalizer - self.log_normalizer)

    @property
    def eta_empirical(self) -> float:
        if self.iteration_count == 0:
            return math.nan
        return self.accepted_count / self.iteration_count

    def step(self) -> StepOutcome:
        if self.method == ARS:
            return ars_step(self)
        return cars_step(self)

    def __repr__(self):
        return "<SamplerState(%s, t=%d, n=%d, m=%d)>" % (
            self.method,
            self.iteration_count,
            self.accepted_count,
            len(self.support),
        )


def _propose(state):
    """Draw x' from the envelope and run the rejection test."""
    if state.rebuild_each_step:
        state.envelope = build_envelope(state.target, state.support)
    env = state.envelope
    x, j = env.draw(state.rng)
    u = 1.0 - state.rng.random()
    gap = state.target.log_density(x) - (env.offsets[j] + env.slopes[j] * x)
    state.iteration_count += 1
    accepted = math.log(u) <= gap
    if accepted:
        state.accepted_count += 1
    return x, accepted


def ars_step(state: SamplerState) -> StepOutcome:
    """One iteration of ARS: a rejected point becomes a node."""
    x, accepted = _propose(state)
    if accepted:
        return StepOutcome(x, True, log_normalizer_after=state.log_normalizer)
    return ars_adapt(state, x)


def ars_adapt(state: SamplerState, x: float) -> StepOutcome:
    """Insert the rejected point x into the support set."""
    support = state.support.insert(x)
    if support is state.support:
        log.debug("Skipping insertion of duplicate node: %r", x)
        return StepOutcome(x, False, log_normalizer_after=state.log_normalizer)
    try:
        envelope = build_envelope(state.target, support)
    except DegenerateNodes as exc:
        log.debug("Skipping insertion of %r: %s", x, exc)
        return StepOutcome(x, False, log_normalizer_after=state.log_normalizer)
    state.support = support
    state.envelope = envelope
    return StepOutcome(
        x, False, log_normalizer_after=envelope.log_normalizer, node_added=True
    )


def cars_step(state: SamplerState) -> StepOutcome:
    """One iteration of CARS: a rejected point may replace its closest
    node when that strictly lowers the normalizer."""
    x, accepted = _propose(state)
    if accepted:
        return StepOutcome(x, True, log_normalizer_after=state.log_normalizer)
    return cars_adapt(state, x)


def cars_adapt(state: SamplerState, x: float) -> StepOutcome:
    """Try swapping the rejected point x for its closest node."""
    current = state.envelope
    index = state.support.closest(x)
    if abs(state.support[index] - x) <= DEDUP_EPSILON:
        return StepOutcome(
            x, False, swap_attempted=True, log_normalizer_after=current.log_normalizer
        )
    try:
        candidate = state.support.swap(index, x)
        proposal = build_envelope(state.target, candidate)
        log_candidate = proposal.log_normalizer
    except (ImproperProposal, DegenerateNodes):
        log_candidate = math.inf
    if log_candidate < current.log_normalizer:
        log.debug("Swapped node %r for %r", state.support[index], x)
        state.support = candidate
        state.envelope = proposal
        return StepOutcome(
            x,
            False,
            swap_attempted=True,
            swap_accepted=True,
            log_normalizer_after=log_candidate,
        )
    return StepOutcome(
        x, False, swap_attempted=True, log_normalizer_after=current.log_normalizer
    )


def run(
    state: SamplerState,
    n_samples: int,
    trace: Optional[Callable[[SamplerState, StepOutcome], None]] = None,
):
    """Iterate until n_samples more samples are accepted. Returns the
    accepted samples and the statistics of the chain at termination.
    The optional trace hook sees the state and outcome of every step."""
    n_samples = int(n_samples)
    if n_samples < 1:
        raise InvalidParameter("Number of samples must be positive: %r" % n_samples)
    samples: List[float] = []
    step = ars_step if state.method == ARS else cars_step
    started = time.perf_counter()
    if trace is None:
        while len(samples) < n_samples:
            outcome = step(state)
            if outcome.accepted:
                samples.append(outcome.sample)
    else:
        while len(samples) < n_samples:
            outcome = step(state)
            if outcome.accepted:
                samples.append(outcome.sample)
            trace(state, outcome)
    elapsed = time.perf_counter() - started
    return samples, run_stats(state, elapsed)


def run_stats(state: SamplerState, elapsed: float = 0.0) -> RunStats:
    eta_empirical = state.eta_empirical
    eta_final = state.eta_exact
    if eta_final is None:
        eta_final = eta_empirical
    return RunStats(
        method=state.method,
        accepted=state.accepted_count,
        iterations=state.iteration_count,
        final_nodes=len(state.support),
        eta_final=eta_final,
        eta_empirical=eta_empirical,
        log_normalizer=state.log_normalizer,
        elapsed=elapsed,
    )


def sample(target, n_samples, method=CARS, nodes=3, seed=None, rule=None):
    """Draw n_samples exact samples from the target in one call."""
    state = SamplerState.create(target, method, nodes, seed=seed, rule=rule)
    samples, _ = run(state, n_samples)
    return samples


__all__ = [
    "ARS",
    "CARS",
    "SamplerState",
    "StepOutcome",
    "RunStats",
    "WindowRule",
    "EndpointsRule",
    "initial_support",
    "ars_step",
    "ars_adapt",
    "cars_step",
    "cars_adapt",
    "run",
    "sample",
]

"""
Self-checks of the samplers against closed-form results.

Each check returns a ``Check`` record rather than raising, so that the
command line can report every result before deciding on the exit code.
"""
import math
import logging
from typing import Callable, List, NamedTuple

import numpy

from cheapars.diagnostics import exact_acceptance_rate, ks_statistic
from cheapars.envelope import SupportSet, build_envelope
from cheapars.exc import CheapARSException
from cheapars.sampler import ARS, CARS, SamplerState, initial_support, run
from cheapars.targets import GammaTarget, GaussianTarget

log = logging.getLogger(__name__)

# Hull of V(x) = log x - x / 2 on nodes {1, 2, 4} has area (10 + 4 log 2) / e.
GAMMA_ORACLE = (10.0 + 4.0 * math.log(2.0)) / math.e
STATIONARY_NODES = (-1.0, 0.0, 1.0)


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        return "%s %s: %s" % (status, self.name, self.detail)


def _grid(target, points=10000):
    lower = max(target.support_lower, -10.0)
    upper = min(target.support_upper, 40.0)
    grid = numpy.linspace(lower, upper, points + 2)[1:-1]
    return grid


def check_oracles():
    gaussian = GaussianTarget(0.5)
    gamma = GammaTarget(2.0, 2.0)
    cases = [
        ("gaussian {-1,0,1}", gaussian, (-1.0, 0.0, 1.0), 2.0),
        ("gaussian {-1,1}", gaussian, (-1.0, 1.0), math.e),
        ("gamma {1,2,4}", gamma, (1.0, 2.0, 4.0), GAMMA_ORACLE),
    ]
    worst = 0.0
    for label, target, nodes, expected in cases:
        env = build_envelope(target, SupportSet(nodes))
        error = abs(env.normalizer - expected) / expected
        log.debug("Oracle %s: c_t=%r, relative error %g", label, env.normalizer, error)
        worst = max(worst, error)
    return Check("oracles", worst < 1e-9, "max relative error %.3g" % worst)


def check_dominance(sets=200, seed=0):
    rng = numpy.random.default_rng(seed)
    targets = [GaussianTarget(0.5), GammaTarget(2.0, 2.0)]
    worst = math.inf
    for k in range(sets):
        target = targets[k % 2]
        count = int(rng.integers(2, 12))
        support = initial_support(target, target.default_initial_rule(count), rng)
        env = build_envelope(target, support)
        grid = _grid(target)
        values = numpy.array([target.log_density(float(x)) for x in grid])
        gap = float(numpy.min(env.log_eval_many(grid) - values))
        worst = min(worst, gap)
    return Check("dominance", worst >= -1e-9, "min W - V = %.3g" % worst)


def check_rejection_identity(envelopes=20, draws=100000, seed=1):
    rng = numpy.random.default_rng(seed)
    targets = [GaussianTarget(0.5), GammaTarget(2.0, 2.0)]
    worst = 0.0
    for k in range(envelopes):
        target = targets[k % 2]
        count = int(rng.integers(2, 6))
        support = initial_support(target, target.default_initial_rule(count), rng)
        state = SamplerState(target, ARS, support, rng=rng)
        env = state.envelope
        rejected = 0
        for _ in range(draws):
            x, j = env.draw(rng)
            u = 1.0 - rng.random()
            gap = target.log_density(x) - (env.offsets[j] + env.slopes[j] * x)
            if math.log(u) > gap:
                rejected += 1
        expected = 1.0 - exact_acceptance_rate(env, target)
        worst = max(worst, abs(rejected / draws - expected))
    return Check("rejection identity", worst <= 0.005, "max deviation %.4f" % worst)


def check_monotone(n_samples=5000, seed=2):
    violations = 0
    target = GaussianTarget(0.5)
    for method in (ARS, CARS):
        state = SamplerState.create(target, method, 3, seed=seed)
        previous = [state.log_normalizer]

        def watch(state, outcome):
            nonlocal violations
            if outcome.log_normalizer_after > previous[0]:
                violations += 1
            previous[0] = outcome.log_normalizer_after

        run(state, n_samples, trace=watch)
    return Check("monotone normalizer", violations == 0, "%d violations" % violations)


def check_exactness(n_samples=100000, seed=3):
    worst = 0.0
    for target in (GaussianTarget(0.5), GammaTarget(2.0, 2.0)):
        state = SamplerState.create(target, CARS, 5, seed=seed)
        samples, _ = run(state, n_samples)
        worst = max(worst, ks_statistic(samples, target.cdf))
    return Check("exactness", worst < 0.006, "max KS statistic %.4f" % worst)


def check_stationary(n_samples=20000, seed=4):
    target = GaussianTarget(0.5)
    state = SamplerState(target, CARS, (-1.5, -1.0, 1.8), seed=seed)
    run(state, n_samples)
    distance = max(abs(a - b) for a, b in zip(state.support, STATIONARY_NODES))
    eta_gap = abs(state.eta_exact - math.sqrt(math.pi) / 2.0)
    passed = distance < 0.1 and eta_gap < 0.003
    detail = "nodes %r, eta gap %.4f" % (state.support.to_list(), eta_gap)
    return Check("stationary set", passed, detail)


CHECKS: List[Callable[[], Check]] = [
    check_oracles,
    check_dominance,
    check_rejection_identity,
    check_monotone,
    check_exactness,
    check_stationary,
]


def run_checks(checks=None) -> List[Check]:
    results = []
    for check in checks or CHECKS:
        try:
            result = check()
        except CheapARSException as exc:
            result = Check(check.__name__, False, "error: %s" % exc)
        log.info("%s", result)
        results.append(result)
    return results

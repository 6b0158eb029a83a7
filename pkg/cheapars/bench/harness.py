"""
Replicated benchmark runs of ARS and CARS.

Each replica is described by a small picklable job, so replicas can be
spread over worker processes. Workers rebuild the target from its
registry name; results come back in submission order and are aggregated
with plain sums, so the output does not depend on scheduling.
"""
import math
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import numpy

from cheapars.bench.config import Cell, ExperimentConfig
from cheapars.exc import CheapARSException, InvalidConfig
from cheapars.sampler import ARS, CARS, SamplerState, initial_support
from cheapars.sampler import make_rule, run
from cheapars.targets import registry

log = logging.getLogger(__name__)


class ReplicaJob(NamedTuple):
    target: str
    params: Dict[str, float]
    method: str
    n_samples: int
    nodes: int
    seed: int
    rule: Optional[Tuple[str, float, float]] = None
    rebuild_each_step: bool = False


class BenchRow(NamedTuple):
    method: str
    target: str
    N: int
    nodes: int
    mean_time_s: float
    normalized_time: float
    mean_eta_final: float
    stderr_eta: float
    mean_m_final: float

    @property
    def cell(self) -> Cell:
        return Cell(self.method, self.N, self.nodes)

    def to_dict(self) -> Dict[str, Any]:
        return self._asdict()


def run_replica(job: ReplicaJob):
    """Run one independent chain; only the sampling loop is timed."""
    target = registry.make(job.target, job.params)
    rng = numpy.random.default_rng(job.seed)
    if job.rule is None:
        rule = target.default_initial_rule(job.nodes)
    else:
        rule = make_rule(job.rule[0], job.rule[1], job.rule[2], job.nodes)
    support = initial_support(target, rule, rng)
    state = SamplerState(
        target,
        job.method,
        support,
        seed=job.seed,
        rng=rng,
        rebuild_each_step=job.rebuild_each_step,
    )
    _, stats = run(state, job.n_samples)
    return stats


def summarize(stats_list):
    """Mean wall time, mean and standard error of the final acceptance
    rate, and mean final node count over replicas."""
    times = numpy.array([s.elapsed for s in stats_list], dtype=float)
    etas = numpy.array([s.eta_final for s in stats_list], dtype=float)
    nodes = numpy.array([s.final_nodes for s in stats_list], dtype=float)
    stderr = 0.0
    if len(etas) > 1:
        stderr = float(etas.std(ddof=1) / math.sqrt(len(etas)))
    return float(times.mean()), float(etas.mean()), stderr, float(nodes.mean())


class Experiment(object):
    """A grid of (method, N, nodes) cells run with the same replica seeds.
    Cells whose replicas fail are dropped and listed in ``failures``."""

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self.failures: List[Tuple[Cell, str]] = []
        self.stats: Dict[Cell, list] = {}

    def jobs(self, cell: Cell) -> List[ReplicaJob]:
        config = self.config
        return [
            ReplicaJob(
                target=config.target,
                params=dict(config.target_params),
                method=cell.method,
                n_samples=cell.n_samples,
                nodes=cell.nodes,
                seed=config.seed + k,
                rule=config.initial_rule,
                rebuild_each_step=config.rebuild_each_step,
            )
            for k in range(config.replicas)
        ]

    def run_cell(self, cell: Cell, executor=None):
        jobs = self.jobs(cell)
        log.info("Running %s (%d replicas)", cell, len(jobs))
        try:
            if executor is None:
                results = [run_replica(job) for job in jobs]
            else:
                results = list(executor.map(run_replica, jobs))
        except CheapARSException as exc:
            log.error("Cell %s aborted: %s", cell, exc)
            self.failures.append((cell, str(exc)))
            return None
        self.stats[cell] = results
        return results

    def run(self) -> List[BenchRow]:
        config = self.config
        if config.jobs > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as executor:
                for cell in config.cells:
                    self.run_cell(cell, executor)
        else:
            for cell in config.cells:
                self.run_cell(cell)
        return self.rows()

    def rows(self) -> List[BenchRow]:
        config = self.config
        summaries = {cell: summarize(s) for cell, s in self.stats.items()}
        baseline = summaries.get(config.baseline)
        if baseline is None:
            log.warning("Baseline cell %s has no results", config.baseline)
        rows = []
        for cell in config.cells:
            if cell not in summaries:
                continue
            mean_time, mean_eta, stderr, mean_nodes = summaries[cell]
            normalized = math.nan
            if baseline is not None and baseline[0] > 0:
                normalized = mean_time / baseline[0]
            rows.append(
                BenchRow(
                    method=cell.method,
                    target=config.target,
                    N=cell.n_samples,
                    nodes=cell.nodes,
                    mean_time_s=mean_time,
                    normalized_time=normalized,
                    mean_eta_final=mean_eta,
                    stderr_eta=stderr,
                    mean_m_final=mean_nodes,
                )
            )
        return rows


def run_experiment(config: ExperimentConfig) -> List[BenchRow]:
    return Experiment(config).run()


def _registered_target(target):
    if isinstance(target, str):
        return target, {}
    if getattr(target, "name", None) is None or registry.get(target.name) is None:
        raise InvalidConfig("Benchmarks need a registered target: %r" % target)
    return target.name, dict(target.params)


def sweep_nodes(
    target, n_samples, node_list, replicas, seed=0, jobs=1, initial_rule=None
) -> List[BenchRow]:
    """CARS at a fixed N for each node budget M, timed relative to the
    smallest M."""
    name, params = _registered_target(target)
    nodes = sorted(set(int(m) for m in node_list))
    if not len(nodes):
        raise InvalidConfig("Node sweep needs at least one node count")
    config = ExperimentConfig(
        target=name,
        target_params=params,
        methods=[CARS],
        n_samples_list=[int(n_samples)],
        node_counts=nodes,
        replicas=replicas,
        seed=seed,
        jobs=jobs,
        initial_rule=initial_rule,
        baseline=Cell(CARS, int(n_samples), nodes[0]),
    )
    return run_experiment(config)


def sweep_samples(
    target,
    n_list,
    nodes,
    replicas,
    seed=0,
    jobs=1,
    methods=(ARS, CARS),
    initial_rule=None,
) -> List[BenchRow]:
    """ARS against CARS as a function of N at m0 = M = nodes, timed
    relative to the smallest N of the last method (CARS by default)."""
    name, params = _registered_target(target)
    n_values = sorted(set(int(n) for n in n_list))
    if not len(n_values):
        raise InvalidConfig("Sample sweep needs at least one N")
    methods = list(methods)
    config = ExperimentConfig(
        target=name,
        target_params=params,
        methods=methods,
        n_samples_list=n_values,
        node_counts=[int(nodes)],
        replicas=replicas,
        seed=seed,
        jobs=jobs,
        initial_rule=initial_rule,
        baseline=Cell(methods[-1], n_values[0], int(nodes)),
    )
    return run_experiment(config)

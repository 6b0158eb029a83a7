import logging
from typing import List, NamedTuple, Tuple

from cheapars.sampler import SamplerState, run

log = logging.getLogger(__name__)


class Snapshot(NamedTuple):
    """The envelope of a chain as it was after a given iteration."""

    iteration: int
    log_normalizer: float
    nodes: Tuple[float, ...]
    pieces: List[tuple]


def _snapshot(state):
    return Snapshot(
        iteration=state.iteration_count,
        log_normalizer=state.log_normalizer,
        nodes=tuple(state.support),
        pieces=state.envelope.dump(),
    )


def trace_run(
    target, method, nodes, n_samples, seed=None, snapshot_iterations=(0,), rule=None
) -> List[Snapshot]:
    """Run a single chain and record the envelope at the requested
    iterations. Iteration 0 is the initial hull; the state at termination
    is always recorded last."""
    wanted = sorted(set(int(t) for t in snapshot_iterations))
    state = SamplerState.create(target, method, nodes, seed=seed, rule=rule)
    snapshots = []
    if 0 in wanted:
        snapshots.append(_snapshot(state))
    pending = set(t for t in wanted if t > 0)

    def record(state, outcome):
        if state.iteration_count in pending:
            pending.discard(state.iteration_count)
            snapshots.append(_snapshot(state))

    run(state, n_samples, trace=record)
    if len(pending):
        log.info("Run ended before iterations %s", sorted(pending))
    if not len(snapshots) or snapshots[-1].iteration != state.iteration_count:
        snapshots.append(_snapshot(state))
    return snapshots

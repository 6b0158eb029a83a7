from cheapars.bench.config import Cell, ExperimentConfig, load_config
from cheapars.bench.harness import BenchRow, Experiment, run_experiment
from cheapars.bench.harness import sweep_nodes, sweep_samples
from cheapars.bench.trace import Snapshot, trace_run

__all__ = [
    "Cell",
    "ExperimentConfig",
    "load_config",
    "BenchRow",
    "Experiment",
    "run_experiment",
    "sweep_nodes",
    "sweep_samples",
    "Snapshot",
    "trace_run",
]

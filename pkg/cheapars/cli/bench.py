import click
import logging

from cheapars.bench.harness import Experiment, sweep_nodes, sweep_samples
from cheapars.cli.cli import cli, EXIT_RUNTIME
from cheapars.cli.util import abort_on_broken_pipe, build_config
from cheapars.cli.util import experiment_options
from cheapars.export.csv import BenchCSVExporter, write_rows

log = logging.getLogger(__name__)


def export_rows(rows, out, name):
    stdout = click.get_text_stream("stdout")
    write_rows(stdout, rows)
    if out is not None:
        exporter = BenchCSVExporter(out, name=name)
        for row in rows:
            exporter.write(row)
        exporter.finalize()
        log.info("Wrote %s", exporter.path(name))


@cli.command("bench", help="Replicated ARS/CARS grid over N and node counts")
@experiment_options
@abort_on_broken_pipe
def bench(**kwargs):
    config = build_config(**kwargs)
    experiment = Experiment(config)
    rows = experiment.run()
    export_rows(rows, config.out or ".", "bench")
    if len(experiment.failures):
        return EXIT_RUNTIME


@cli.command("sweep", help="CARS over node budgets, or ARS/CARS over N")
@experiment_options
@click.option(
    "--over",
    type=click.Choice(["nodes", "n"]),
    default="nodes",
    help="Swept quantity",
)
@abort_on_broken_pipe
def sweep(over, **kwargs):
    config = build_config(**kwargs)
    target = config.make_target()
    rule = config.initial_rule
    if over == "nodes":
        rows = sweep_nodes(
            target,
            config.n_samples_list[0],
            config.node_counts,
            config.replicas,
            seed=config.seed,
            jobs=config.jobs,
            initial_rule=rule,
        )
    else:
        rows = sweep_samples(
            target,
            config.n_samples_list,
            config.node_counts[0],
            config.replicas,
            seed=config.seed,
            jobs=config.jobs,
            methods=config.methods,
            initial_rule=rule,
        )
    export_rows(rows, config.out or ".", "sweep_%s" % over)

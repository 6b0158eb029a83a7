import click
import logging

from cheapars.bench.trace import trace_run
from cheapars.cli.cli import cli
from cheapars.cli.util import make_target, parse_nodes, target_options
from cheapars.export.csv import TraceCSVExporter
from cheapars.sampler import METHODS
from cheapars.util import parse_ints

log = logging.getLogger(__name__)


@cli.command("trace", help="Dump the envelope of one chain at given iterations")
@target_options
@click.option("-m", "--method", type=click.Choice(METHODS), default="cars")
@click.option("-n", "--n", "n_samples", type=int, default=10000, help="Samples")
@click.option("--nodes", default="3", help="Node count or explicit nodes")
@click.option("-s", "--seed", type=int, default=None)
@click.option("--trace-at", default="0", help="Iterations to snapshot, e.g. 0,10,100")
@click.option(
    "-o",
    "--out",
    type=click.Path(file_okay=False, writable=True),
    default=".",
    help="output directory",
)
def trace(target, sigma2, shape, scale, method, n_samples, nodes, seed, trace_at, out):
    target = make_target(target, sigma2=sigma2, shape=shape, scale=scale)
    snapshots = trace_run(
        target,
        method,
        parse_nodes(nodes),
        n_samples,
        seed=seed,
        snapshot_iterations=parse_ints(trace_at),
    )
    exporter = TraceCSVExporter(out)
    stdout = click.get_text_stream("stdout")
    for snapshot in snapshots:
        exporter.write(snapshot)
        nodes_text = ",".join("%.4f" % n for n in snapshot.nodes)
        stdout.write(
            "%d,%r,%s\n" % (snapshot.iteration, snapshot.log_normalizer, nodes_text)
        )
    exporter.finalize()

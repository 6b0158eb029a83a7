import click
import logging

from cheapars.cli.cli import cli
from cheapars.cli.util import abort_on_broken_pipe, make_target, parse_nodes
from cheapars.cli.util import target_options
from cheapars.diagnostics import report
from cheapars.sampler import METHODS, SamplerState, run

log = logging.getLogger(__name__)


@cli.command("sample", help="Draw exact samples from a target")
@target_options
@click.option("-m", "--method", type=click.Choice(METHODS), default="cars")
@click.option("-n", "--n", "n_samples", type=int, default=1000, help="Samples")
@click.option("--nodes", default="3", help="Node count or explicit nodes")
@click.option("-s", "--seed", type=int, default=None)
@click.option("--literal/--reuse", default=False, help="Rebuild every iteration")
@click.option("--report", "with_report", is_flag=True, help="Log diagnostics")
@click.option("-o", "--outfile", type=click.File("w"), default="-")  # noqa
@abort_on_broken_pipe
def sample(
    target,
    sigma2,
    shape,
    scale,
    method,
    n_samples,
    nodes,
    seed,
    literal,
    with_report,
    outfile,
):
    target = make_target(target, sigma2=sigma2, shape=shape, scale=scale)
    state = SamplerState.create(
        target, method, parse_nodes(nodes), seed=seed, rebuild_each_step=literal
    )
    samples, stats = run(state, n_samples)
    for value in samples:
        outfile.write("%r\n" % value)
    log.info(
        "%s: %d samples, %d iterations, %d nodes, eta=%.4f",
        method,
        stats.accepted,
        stats.iterations,
        stats.final_nodes,
        stats.eta_final,
    )
    if with_report:
        result = report(
            state.envelope, target, samples, stats.iterations, stats.accepted
        )
        for name, value in zip(result.HEADER, result.to_row()):
            log.info("%s: %r", name, value)

import click
from functools import wraps

from cheapars.bench.config import load_config
from cheapars.exc import InvalidParameter
from cheapars.sampler import RULE_KINDS
from cheapars.targets import registry
from cheapars.util import parse_floats


def target_options(func):
    """Options selecting a built-in target family and its parameters."""
    options = [
        click.option(
            "-t",
            "--target",
            type=click.Choice(registry.names),
            default=None,
            help="Target family",
        ),
        click.option("--sigma2", type=float, default=None, help="Gaussian variance"),
        click.option("--r", "shape", type=float, default=None, help="Gamma shape"),
        click.option("--a", "scale", type=float, default=None, help="Gamma scale"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def experiment_options(func):
    """Options shared by the replicated benchmark commands. Every flag
    overrides the corresponding key of the config file."""
    options = [
        click.option(
            "-c",
            "--config",
            "config_file",
            type=click.Path(exists=True, dir_okay=False),
            default=None,
            help="Experiment config (flat YAML)",
        ),
        click.option("-m", "--method", default=None, help="ars, cars or both"),
        click.option("-n", "--n", "n_samples", default=None, help="N values"),
        click.option("--nodes", default=None, help="Node counts m0 / M, e.g. 3,5,10"),
        click.option("-r", "--replicas", type=int, default=None),
        click.option("-s", "--seed", type=int, default=None, help="Base seed"),
        click.option("-j", "--jobs", type=int, default=None, help="Parallel replicas"),
        click.option(
            "-o",
            "--out",
            type=click.Path(file_okay=False, writable=True),
            default=None,
            help="output directory",
        ),
        click.option("--baseline-cell", default=None, help="method:N:nodes"),
        click.option(
            "--init-rule",
            type=click.Choice(RULE_KINDS),
            default=None,
            help="Initial node protocol",
        ),
        click.option("--init-lo", type=float, default=None),
        click.option("--init-hi", type=float, default=None),
        click.option(
            "--literal/--reuse",
            default=None,
            help="Rebuild the proposal at every iteration",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return target_options(func)


def build_config(
    config_file=None,
    target=None,
    sigma2=None,
    shape=None,
    scale=None,
    method=None,
    n_samples=None,
    nodes=None,
    replicas=None,
    seed=None,
    jobs=None,
    out=None,
    baseline_cell=None,
    init_rule=None,
    init_lo=None,
    init_hi=None,
    literal=None,
    **kwargs
):
    return load_config(
        config_file,
        target=target,
        sigma2=sigma2,
        r=shape,
        a=scale,
        method=method,
        n=n_samples,
        nodes=nodes,
        replicas=replicas,
        seed=seed,
        jobs=jobs,
        out=out,
        baseline=baseline_cell,
        init_rule=init_rule,
        init_lo=init_lo,
        init_hi=init_hi,
        literal=literal,
        **kwargs
    )


def make_target(target, sigma2=None, shape=None, scale=None):
    return registry.make(target or "gaussian", sigma2=sigma2, r=shape, a=scale)


def parse_nodes(value, default=3):
    """A single integer is a node count, anything else explicit nodes."""
    if value is None:
        return default
    try:
        values = parse_floats(value)
    except ValueError:
        raise InvalidParameter("Invalid nodes: %r" % value)
    if len(values) == 1 and values[0] == int(values[0]):
        return int(values[0])
    return values


def abort_on_broken_pipe(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BrokenPipeError:
            raise click.Abort()

    return wrapper

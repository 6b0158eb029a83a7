import sys
import click
import logging

from cheapars.exc import CheapARSException, InvalidConfig, InvalidParameter
from cheapars.exc import ValidationFailed

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2
EXIT_VALIDATION = 3


class CommandGroup(click.Group):
    """Map library errors to the documented process exit codes."""

    def main(self, *args, **kwargs):
        kwargs["standalone_mode"] = False
        try:
            rv = super(CommandGroup, self).main(*args, **kwargs)
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_CONFIG)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_CONFIG)
        except ValidationFailed as exc:
            log.error("%s: %s", exc, ", ".join(exc.failed))
            sys.exit(EXIT_VALIDATION)
        except (InvalidConfig, InvalidParameter) as exc:
            log.error("Configuration error: %s", exc)
            for key, error in getattr(exc, "errors", {}).items():
                log.error("  %s: %s", key, error)
            sys.exit(EXIT_CONFIG)
        except CheapARSException as exc:
            log.error("%s: %s", type(exc).__name__, exc)
            sys.exit(EXIT_RUNTIME)
        except ArithmeticError as exc:
            log.error("Numerical error: %s: %s", type(exc).__name__, exc)
            sys.exit(EXIT_RUNTIME)
        if isinstance(rv, int):
            sys.exit(rv)
        sys.exit(EXIT_OK)


@click.group(cls=CommandGroup, help="Adaptive rejection sampling benchmarks")
@click.option("-v", "--verbose", is_flag=True, default=False, help="Debug logging")
@click.option("-q", "--quiet", is_flag=True, default=False, help="Only warnings")
def cli(verbose, quiet):
    level = logging.INFO
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    fmt = "%(name)s [%(levelname)s] %(message)s"
    logging.basicConfig(stream=sys.stderr, level=level, format=fmt)

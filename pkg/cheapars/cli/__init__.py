from cheapars.cli.cli import cli

# Register the subcommands on the group.
from cheapars.cli import sample, bench, trace, validate  # noqa

__all__ = ["cli"]

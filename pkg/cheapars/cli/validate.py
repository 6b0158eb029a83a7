import click

from cheapars.bench.validation import run_checks
from cheapars.cli.cli import cli
from cheapars.exc import ValidationFailed


@cli.command("validate", help="Run the invariant and goodness-of-fit checks")
def validate():
    stdout = click.get_text_stream("stdout")
    results = run_checks()
    for result in results:
        stdout.write("%s\n" % (result,))
    failed = [r.name for r in results if not r.passed]
    if len(failed):
        raise ValidationFailed("Validation failed", failed=failed)

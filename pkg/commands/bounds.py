import click

from commands.common import emit, format_option, usage_errors
from settings.run_config import ReportFormat, RunConfig, Subcommand
from utils.bounds import bounds_report


@click.command("bounds")
@click.option("--n", "n", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@format_option
@usage_errors
def bounds(n: int, d: int, fmt: str):
    """Print the closed-form lower and upper bounds for (N, D)."""
    config = RunConfig(Subcommand.BOUNDS, n=n, d=d, report_format=ReportFormat(fmt)).validate()
    emit(bounds_report(n, d).as_dict(), config.report_format)

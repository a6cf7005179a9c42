from functools import wraps
from typing import Any, Dict, Tuple, Union

import click

from settings.run_config import ReportFormat
from utils.family_io import render_report

EXIT_OK = 0
EXIT_INCOMPLETE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

format_option = click.option(
    "--format", "fmt",
    type=click.Choice([f.value for f in ReportFormat]),
    default=ReportFormat.KV.value,
    show_default=True,
    help="Report layout: flat key=value lines or one JSON object.",
)


def usage_errors(fn):
    """Turn precondition failures into click usage errors (exit code 2)."""
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValueError as e:
            raise click.UsageError(str(e))
    return wrapper


def emit(fields: Dict[str, Any], fmt: Union[str, ReportFormat], err: bool = False) -> None:
    click.echo(render_report(fields, ReportFormat(fmt)), err=err)


def parse_range(text: str) -> Tuple[int, int]:
    """'A..B' -> (A, B), inclusive; a bare 'A' means A..A."""
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"Range must look like A..B, got {text!r}")
    if lo > hi:
        raise ValueError(f"Empty range {text!r}")
    return lo, hi

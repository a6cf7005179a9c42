import logging
import sys
from math import comb
from typing import Any, Dict, List, Optional

import click
from tqdm import tqdm

from commands.common import parse_range, usage_errors
from settings.run_config import Budget, RunConfig, Subcommand
from utils.bounds import bounds_report
from utils.constructions import general_family
from utils.exact_search import SearchStatus, exact_beta
from utils.family_io import render_table
from utils.myutils import get_config_int

logger = logging.getLogger(__name__)

COLUMNS = ["n", "d", "lower", "constructed", "upper", "exact"]

# stderr can be missing under frozen GUI builds
disable_tqdm = not sys.stderr


def _exact_if_cheap(n: int, d: int, node_budget: int) -> Optional[str]:
    if comb(n, d) * 2 ** (d - 1) > get_config_int("table_exact_candidate_cap", 200):
        return None
    try:
        result = exact_beta(n, d, Budget(nodes=node_budget))
    except ValueError as e:
        logger.info("exact skipped for (n=%d, d=%d): %s", n, d, e)
        return None
    if result.status is SearchStatus.OPTIMAL:
        return str(result.value)
    return f">={result.value}"


def table_row(n: int, d: int, exact: bool = True, node_budget: int = 200_000) -> Dict[str, Any]:
    report = bounds_report(n, d)
    row: Dict[str, Any] = {"n": n, "d": d, "lower": report.lower_best, "upper": report.upper_best}
    if d <= n - 1:
        row["constructed"] = len(general_family(n, d))
    if exact:
        row["exact"] = _exact_if_cheap(n, d, node_budget)
    return row


@click.command("table")
@click.option("--n-range", "n_range", required=True, help="Inclusive range of n, e.g. 4..12.")
@click.option("--d-range", "d_range", required=True, help="Inclusive range of d, e.g. 2..6.")
@click.option("--no-exact", is_flag=True, help="Skip the exact column even for tiny instances.")
@click.option("--budget-nodes", type=int, default=200_000, show_default=True,
              help="Search nodes allowed per exact entry.")
@usage_errors
def table(n_range: str, d_range: str, no_exact: bool, budget_nodes: int):
    """Bounds, constructed size and (when cheap) the exact optimum over a grid of (n, d)."""
    n_lo, n_hi = parse_range(n_range)
    d_lo, d_hi = parse_range(d_range)
    if n_lo < 2 or d_lo < 2:
        raise ValueError(f"Ranges must start at 2 or above, got n={n_range}, d={d_range}")
    config = RunConfig(Subcommand.TABLE, budget=Budget(nodes=budget_nodes)).validate()

    grid = [(n, d) for n in range(n_lo, n_hi + 1) for d in range(d_lo, min(d_hi, n) + 1)]
    rows: List[Dict[str, Any]] = []
    for n, d in tqdm(grid, desc="table", file=sys.stderr, disable=disable_tqdm):
        rows.append(table_row(n, d, exact=not no_exact, node_budget=config.budget.nodes))
    click.echo(render_table(rows, COLUMNS))

from pathlib import Path
from typing import Optional

import click

from commands.common import EXIT_BUDGET, emit, format_option, usage_errors
from settings.run_config import Budget, ReportFormat, RunConfig, Subcommand
from utils.exact_search import SearchStatus, exact_beta
from utils.family_io import write_family


@click.command("exact")
@click.option("--n", "n", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--max-k", type=int, default=None, help="Give up after refuting this family size.")
@click.option("--budget-nodes", type=int, default=None)
@click.option("--budget-secs", type=float, default=None)
@click.option("--candidate-cap", type=int, default=None, help="Override the candidate-count guardrail.")
@click.option("--universe-cap", type=int, default=None, help="Override the point-count guardrail.")
@click.option("--out", "out", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Where to write the optimal witness family.")
@format_option
@click.pass_context
@usage_errors
def exact(ctx, n: int, d: int, max_k: Optional[int], budget_nodes: Optional[int], budget_secs: Optional[float],
          candidate_cap: Optional[int], universe_cap: Optional[int], out: Optional[Path], fmt: str):
    """Find the minimum family size for (N, D) by exhaustive cover search."""
    budget = Budget(nodes=budget_nodes, seconds=budget_secs, max_k=max_k)
    config = RunConfig(Subcommand.EXACT, n=n, d=d, budget=budget, report_format=ReportFormat(fmt)).validate()

    result = exact_beta(n, d, budget, candidate_cap=candidate_cap, universe_cap=universe_cap)
    fields = result.as_dict()
    if result.witness is not None:
        fields["witness"] = [x.to_text() for x in result.witness]
        if out is not None:
            write_family(result.witness, out)
            fields["out"] = str(out)
    emit(fields, config.report_format)
    ctx.exit(0 if result.status is SearchStatus.OPTIMAL else EXIT_BUDGET)

from pathlib import Path
from typing import Optional

import click

from commands.common import EXIT_INCOMPLETE, emit, format_option, usage_errors
from settings.run_config import ReportFormat, RunConfig, Subcommand, VerifyMode
from utils.family_io import read_family, read_hypergraph
from utils.myutils import get_config_int
from utils.verifier import verify_full, verify_hypergraph


@click.command("verify")
@click.option("--family", "family_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True)
@click.option("--hypergraph", "hypergraph_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help="Check only this hypergraph's edges instead of the whole cube.")
@click.option("--sampled", "sampled", type=int, default=None,
              help="Check this many random points instead of all (default above the exhaustive cap).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--min-edge-size", type=int, default=None, help="Ignore points with fewer ones than this.")
@format_option
@click.pass_context
@usage_errors
def verify(ctx, family_path: Path, hypergraph_path: Optional[Path], sampled: Optional[int], seed: int,
           min_edge_size: Optional[int], fmt: str):
    """Report which non-trivial edges a family file fails to bisect; exit 0 iff none."""
    family = read_family(family_path)
    mode = VerifyMode.SAMPLED if sampled is not None else VerifyMode.EXHAUSTIVE
    if mode is VerifyMode.EXHAUSTIVE and family.n > get_config_int("exhaustive_cap", 30):
        mode = VerifyMode.SAMPLED
        sampled = get_config_int("default_samples", 1_000_000)
    config = RunConfig(Subcommand.VERIFY, n=family.n, d=family.d, input_path=family_path,
                       hypergraph_path=hypergraph_path, mode=mode, sample_count=sampled, seed=seed,
                       report_format=ReportFormat(fmt)).validate()

    if hypergraph_path is not None:
        graph = read_hypergraph(hypergraph_path, family.n)
        report = verify_hypergraph(family, graph)
        fields = report.as_dict()
        fields["mode"] = "hypergraph"
        fields["min_edge_size"] = graph.min_edge_size()
    else:
        report = verify_full(family, config.mode, samples=config.sample_count, seed=seed,
                             min_edge_size=min_edge_size)
        fields = report.as_dict()
    fields["family_size"] = len(family)
    emit(fields, config.report_format)
    ctx.exit(0 if report.complete else EXIT_INCOMPLETE)

import time
from pathlib import Path
from typing import Optional

import click

from commands.common import EXIT_INCOMPLETE, emit, format_option, usage_errors
from settings.run_config import Method, Provenance, ReportFormat, RunConfig, Subcommand, VerifyMode
from utils.bicoloring import Family
from utils.bounds import general_upper, min_edge_bound
from utils.constructions import composition_family, cycle_family, dedup, general_family, min_edge_family
from utils.family_io import family_to_text, write_family
from utils.verifier import verify_full


def build_family(config: RunConfig, negation_dedup: bool = False) -> Family:
    n, d = config.n, config.d
    if config.method is Method.CYCLE:
        return cycle_family(d)
    if config.method is Method.COMPOSE:
        return dedup(composition_family(n, d), negation=negation_dedup)
    if config.method is Method.MIN_EDGE:
        return min_edge_family(n, d, config.k, negation_dedup=negation_dedup)
    return general_family(n, d, negation_dedup=negation_dedup)


@click.command("construct")
@click.option("--n", "n", type=int, required=True, help="Number of vertices.")
@click.option("--d", "d", type=int, required=True, help="Order: vertices colored per bicoloring.")
@click.option("--k", "k", type=int, default=None, help="Minimum edge size (min-edge method).")
@click.option("--method", type=click.Choice([m.value for m in Method]), default=Method.GENERAL.value, show_default=True)
@click.option("--out", "out", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Family file to write; without it the family goes to stdout.")
@click.option("--summary-only", is_flag=True, help="Print the summary but not the family itself.")
@click.option("--negation-dedup", is_flag=True, help="Also drop sign-flipped duplicates.")
@click.option("--check-samples", type=int, default=None, help="Sampled verification of the new family.")
@click.option("--seed", type=int, default=0, show_default=True)
@format_option
@click.pass_context
@usage_errors
def construct(ctx, n: int, d: int, k: Optional[int], method: str, out: Optional[Path], summary_only: bool,
              negation_dedup: bool, check_samples: Optional[int], seed: int, fmt: str):
    """Build an induced-bisecting family of order D on N vertices."""
    config = RunConfig(Subcommand.CONSTRUCT, n=n, d=d, k=k, method=Method(method), output_path=out,
                       report_format=ReportFormat(fmt)).validate()

    started = time.perf_counter()
    family = build_family(config, negation_dedup)
    elapsed = time.perf_counter() - started

    fields = {
        "n": n,
        "d": d,
        "method": config.method.value,
        "size": len(family),
        "bound": general_upper(n, d),
        "patches": family.count(Provenance.PATCH),
        "elapsed": round(elapsed, 6),
    }
    if config.method is Method.MIN_EDGE:
        fields["min_edge_bound"] = min_edge_bound(n, d, k)
    fields.update({f"count_{name}": value for name, value in family.label_counts().items()})

    exit_code = 0
    if check_samples is not None:
        report = verify_full(family, VerifyMode.SAMPLED, samples=check_samples, seed=seed,
                             min_edge_size=k if config.method is Method.MIN_EDGE else None)
        fields.update({"check_samples": check_samples, "seed": seed, "check_complete": report.complete,
                       "check_misses": report.uncovered_total})
        if not report.complete:
            exit_code = EXIT_INCOMPLETE

    if out is not None:
        write_family(family, out)
        fields["out"] = str(out)
        emit(fields, config.report_format)
    elif summary_only:
        emit(fields, config.report_format)
    else:
        click.echo(family_to_text(family), nl=False)
        emit(fields, config.report_format, err=True)
    ctx.exit(exit_code)

import click

from commands.common import emit, format_option, usage_errors
from settings.run_config import ReportFormat, RunConfig, Subcommand
from utils.bicoloring import Edge
from utils.constructions import CircularPerm, find_pivot


def parse_perm(text: str, n: int) -> CircularPerm:
    try:
        labels = [int(tok) for tok in text.strip().strip("()").split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"Permutation must be comma-separated vertex labels, got {text!r}")
    if len(labels) != n:
        raise ValueError(f"Permutation lists {len(labels)} vertices, expected n={n}")
    return CircularPerm(tuple(v - 1 for v in labels))


@click.command("pivot")
@click.option("--n", "n", type=int, required=True)
@click.option("--perm", "perm", required=True, help='Clockwise order, e.g. "1,2,3,4,5".')
@click.option("--subset", "subset", required=True, help='Odd subset, e.g. "{1,2,3}".')
@click.option("--method", type=click.Choice(["scan", "rotation"]), default="scan", show_default=True)
@format_option
@usage_errors
def pivot(n: int, perm: str, subset: str, method: str, fmt: str):
    """Index i splitting an odd subset of an odd cycle into two short arcs."""
    config = RunConfig(Subcommand.PIVOT, n=n, report_format=ReportFormat(fmt)).validate()
    sigma = parse_perm(perm, n)
    a = Edge.from_text(subset, n)
    i = find_pivot(sigma, a, method=method)
    ordered = sigma.arrange(a.vertices)
    k = len(ordered)
    half = k // 2
    emit({
        "n": n,
        "subset": a.to_braces(),
        "order": [v + 1 for v in ordered],
        "index": i,
        "vertex": ordered[i] + 1,
        "dist_forward": sigma.dist(ordered[i], ordered[(i + half) % k]),
        "dist_back": sigma.dist(ordered[(i + half + 1) % k], ordered[i]),
    }, config.report_format)

# Description: reads and writes family and hypergraph files and renders reports as flat
# key=value text or JSON.
# file name: family_io.py

import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Union

from settings.run_config import Provenance, ReportFormat
from utils.bicoloring import Bicoloring, Edge, Family, Hypergraph

FAMILY_HEADER = "# ibf v1"


def family_to_text(f: Family) -> str:
    lines = [FAMILY_HEADER, f"n={f.n} d={f.d}"]
    lines.extend(x.to_text() for x in f)
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> Family:
    lines = text.splitlines()
    if len(lines) < 2 or lines[0].strip() != FAMILY_HEADER:
        raise ValueError(f"Family file must start with {FAMILY_HEADER!r}")
    fields = dict(tok.split("=", 1) for tok in lines[1].split() if "=" in tok)
    try:
        n, d = int(fields["n"]), int(fields["d"])
    except (KeyError, ValueError):
        raise ValueError(f"Second line must read 'n=<int> d=<int>', got {lines[1]!r}")

    family = Family(n, d)
    for lineno, line in enumerate(lines[2:], start=3):
        if not line.strip():
            continue
        x = Bicoloring.from_text(line)
        if x.n != n or x.d != d:
            raise ValueError(f"Line {lineno}: {line!r} has (n, d)=({x.n}, {x.d}), header says ({n}, {d})")
        family.add(x, Provenance.FILE)
    return family


def write_family(f: Family, path: Union[str, Path]) -> None:
    Path(path).write_text(family_to_text(f), encoding="utf-8")


def read_family(path: Union[str, Path]) -> Family:
    return family_from_text(Path(path).read_text(encoding="utf-8"))


def hypergraph_from_text(text: str, n: int) -> Hypergraph:
    """One '{v1,v2,...}' edge per line, 1-based; '#' starts a comment."""
    edges: List[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            edges.append(Edge.from_text(line, n))
        except ValueError as e:
            raise ValueError(f"Hypergraph line {lineno}: {e}")
    return Hypergraph(n, tuple(edges))


def read_hypergraph(path: Union[str, Path], n: int) -> Hypergraph:
    return hypergraph_from_text(Path(path).read_text(encoding="utf-8"), n)


def _kv_value(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value) if value else "-"
    return str(value)


def render_report(fields: Dict[str, Any], fmt: ReportFormat = ReportFormat.KV) -> str:
    if fmt is ReportFormat.JSON:
        return json.dumps(fields, sort_keys=False)
    return "\n".join(f"{key}={_kv_value(value)}" for key, value in fields.items())


def render_table(rows: Iterable[Dict[str, Any]], columns: List[str]) -> str:
    body = [[_kv_value(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in body]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines.extend("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in body)
    return "\n".join(lines)

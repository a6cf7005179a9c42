from typing import Iterable

from settings.run_config import Provenance
from utils.bicoloring import Bicoloring, Edge, Family


def bc(text: str) -> Bicoloring:
    return Bicoloring.from_text(text)


def edge(n: int, *labels: int) -> Edge:
    """Edge from 1-based vertex labels."""
    return Edge.from_vertices(n, (v - 1 for v in labels))


def fam(*texts: str) -> Family:
    colorings = [bc(t) for t in texts]
    first = colorings[0]
    return Family(first.n, first.d, colorings, [Provenance.FILE] * len(colorings))


def texts(f: Iterable[Bicoloring]) -> list:
    return [x.to_text() for x in f]

# Description: domain values (bicolorings, edges, families, hypergraphs) and the predicates linking
# the vector view (non-trivial orthogonality) to the coloring view (induced bisection).
# file name: bicoloring.py
#
# Vertices are 0-based internally; every text form is 1-based.

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from settings.run_config import Provenance

MINUS_SIGNS = ("-", "−")


@dataclass(frozen=True)
class Bicoloring:
    """A {+1, 0, -1} vector of length n; pos/neg hold the sorted +1 and -1 vertices."""
    n: int
    pos: Tuple[int, ...]
    neg: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"Bicoloring needs n >= 2, got n={self.n}")
        for part in (self.pos, self.neg):
            if part and (part[0] < 0 or part[-1] >= self.n):
                raise ValueError(f"Bicoloring vertex out of range for n={self.n}: {part}")

    @classmethod
    def from_sets(cls, n: int, pos: Iterable[int], neg: Iterable[int]) -> "Bicoloring":
        """Build from explicit 0-based +1 and -1 vertex collections."""
        pos_t = tuple(sorted(pos))
        neg_t = tuple(sorted(neg))
        if len(set(pos_t)) != len(pos_t) or len(set(neg_t)) != len(neg_t):
            raise ValueError(f"Bicoloring has a repeated vertex: pos={pos_t}, neg={neg_t}")
        if not set(pos_t).isdisjoint(neg_t):
            raise ValueError(f"Bicoloring colors a vertex twice: pos={pos_t}, neg={neg_t}")
        return cls(n, pos_t, neg_t)

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "Bicoloring":
        pos, neg = [], []
        for i, s in enumerate(signs):
            if s == 1:
                pos.append(i)
            elif s == -1:
                neg.append(i)
            elif s != 0:
                raise ValueError(f"Sign at position {i + 1} must be +1, 0 or -1, got {s}")
        return cls(len(signs), tuple(pos), tuple(neg))

    @classmethod
    def from_text(cls, text: str) -> "Bicoloring":
        """Parse the length-n '+', '-', '0' form (a Unicode minus is accepted too)."""
        signs = []
        for i, ch in enumerate(text.strip()):
            if ch == "+":
                signs.append(1)
            elif ch in MINUS_SIGNS:
                signs.append(-1)
            elif ch == "0":
                signs.append(0)
            else:
                raise ValueError(f"Invalid character {ch!r} at position {i + 1} in bicoloring {text!r}")
        return cls.from_signs(signs)

    def to_text(self) -> str:
        chars = ["0"] * self.n
        for i in self.pos:
            chars[i] = "+"
        for i in self.neg:
            chars[i] = "-"
        return "".join(chars)

    @property
    def d(self) -> int:
        return len(self.pos) + len(self.neg)

    @property
    def signs(self) -> Tuple[int, ...]:
        values = [0] * self.n
        for i in self.pos:
            values[i] = 1
        for i in self.neg:
            values[i] = -1
        return tuple(values)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.pos + self.neg))

    @cached_property
    def pos_mask(self) -> int:
        return _mask_of(self.pos)

    @cached_property
    def neg_mask(self) -> int:
        return _mask_of(self.neg)

    @property
    def support_mask(self) -> int:
        return self.pos_mask | self.neg_mask

    def negated(self) -> "Bicoloring":
        return Bicoloring(self.n, self.neg, self.pos)

    def canonical(self) -> "Bicoloring":
        """The representative of {self, -self} whose first non-zero entry is +1."""
        if self.neg and (not self.pos or self.neg[0] < self.pos[0]):
            return self.negated()
        return self

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Edge:
    """A subset of [n] held as an n-bit mask (bit i set <=> vertex i+1 is a member)."""
    n: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"Edge mask {self.mask:#x} has bits outside [1, {self.n}]")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "Edge":
        """Build from 0-based vertices."""
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"Vertex {v + 1} lies outside [1, {n}]")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def from_text(cls, text: str, n: Optional[int] = None) -> "Edge":
        """Parse '{1,4,5}' (1-based, needs n) or a 0/1 string whose length is n."""
        text = text.strip()
        if text.startswith("{"):
            if not text.endswith("}"):
                raise ValueError(f"Unterminated edge {text!r}")
            if n is None:
                raise ValueError(f"Brace edge {text!r} needs the dimension n")
            body = text[1:-1].strip()
            labels = [int(tok) for tok in body.split(",") if tok.strip()] if body else []
            return cls.from_vertices(n, (v - 1 for v in labels))
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"Edge {text!r} is neither a 0/1 string nor a brace list")
        if n is not None and len(text) != n:
            raise ValueError(f"Edge {text!r} has length {len(text)}, expected n={n}")
        return cls.from_vertices(len(text), (i for i, ch in enumerate(text) if ch == "1"))

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.mask >> i & 1)

    def to_bits(self) -> str:
        return "".join("1" if self.mask >> i & 1 else "0" for i in range(self.n))

    def to_braces(self) -> str:
        return "{" + ",".join(str(v + 1) for v in self.vertices) + "}"

    def __str__(self) -> str:
        return self.to_braces()


@dataclass
class Family:
    """Ordered bicolorings of a common (n, d), each tagged with where it came from."""
    n: int
    d: int
    colorings: List[Bicoloring] = field(default_factory=list)
    labels: List[Provenance] = field(default_factory=list)

    def __post_init__(self):
        if len(self.labels) != len(self.colorings):
            raise ValueError(f"{len(self.colorings)} colorings but {len(self.labels)} labels")
        for x in self.colorings:
            self._check_member(x)

    def _check_member(self, x: Bicoloring) -> None:
        if x.n != self.n or x.d != self.d:
            raise ValueError(f"Bicoloring {x} has (n, d)=({x.n}, {x.d}); family needs ({self.n}, {self.d})")

    def add(self, x: Bicoloring, label: Provenance) -> None:
        self._check_member(x)
        self.colorings.append(x)
        self.labels.append(label)

    def extend(self, other: "Family") -> None:
        if (other.n, other.d) != (self.n, self.d):
            raise ValueError(f"Cannot merge family ({other.n}, {other.d}) into ({self.n}, {self.d})")
        self.colorings.extend(other.colorings)
        self.labels.extend(other.labels)

    def count(self, label: Provenance) -> int:
        return sum(1 for tag in self.labels if tag is label)

    def label_counts(self) -> Dict[str, int]:
        return {tag.value: self.count(tag) for tag in Provenance if self.count(tag)}

    def __len__(self) -> int:
        return len(self.colorings)

    def __iter__(self) -> Iterator[Bicoloring]:
        return iter(self.colorings)

    def __getitem__(self, index: int) -> Bicoloring:
        return self.colorings[index]


@dataclass
class Hypergraph:
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        seen = set()
        unique = []
        for e in self.edges:
            if e.n != self.n:
                raise ValueError(f"Edge {e} has n={e.n}, hypergraph has n={self.n}")
            if e.mask not in seen:
                seen.add(e.mask)
                unique.append(e)
        self.edges = tuple(unique)

    @classmethod
    def complete(cls, n: int) -> "Hypergraph":
        """Every subset of [n]."""
        return cls(n, tuple(Edge(n, mask) for mask in range(1 << n)))

    @classmethod
    def at_least(cls, n: int, k: int) -> "Hypergraph":
        """Every subset of [n] with at least k vertices."""
        edges = []
        for size in range(max(k, 0), n + 1):
            edges.extend(Edge.from_vertices(n, combo) for combo in combinations(range(n), size))
        return cls(n, tuple(edges))

    def min_edge_size(self) -> int:
        """k(G): the smallest edge cardinality (0 for an edgeless hypergraph)."""
        return min((e.size for e in self.edges), default=0)

    def __len__(self) -> int:
        return len(self.edges)


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_dims(x: Bicoloring, a: Edge) -> None:
    if x.n != a.n:
        raise ValueError(f"Dimension mismatch: bicoloring has n={x.n}, edge has n={a.n}")


def signed_sum(x: Bicoloring, a: Edge) -> int:
    """|a & pos(x)| - |a & neg(x)|, defined for every edge including trivial ones."""
    _check_dims(x, a)
    return (a.mask & x.pos_mask).bit_count() - (a.mask & x.neg_mask).bit_count()


def induced_bisects(x: Bicoloring, a: Edge) -> bool:
    _check_dims(x, a)
    hit = a.mask & x.support_mask
    return hit != 0 and (a.mask & x.pos_mask).bit_count() == (a.mask & x.neg_mask).bit_count()


def nontrivially_orthogonal(v: Bicoloring, p: Edge) -> bool:
    """Dot product zero with some coordinate non-zero in both vectors."""
    return induced_bisects(v, p)


def is_trivial_edge(a: Edge, d: int) -> bool:
    """The empty set, singletons and, for odd d, the whole of [n] can never be bisected."""
    size = a.size
    return size <= 1 or (size == a.n and d % 2 == 1)


def is_trivial_point(p: Edge, d: int) -> bool:
    return is_trivial_edge(p, d)

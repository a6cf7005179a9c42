# Description: every family construction - rotating cycle families, the block partition with its
# pair colorings and block unions, composition onto (d+1)-sets, the general (n, d) family, the
# large-edge variant, duplicate removal, the patch pass, and the circular-permutation pivot.
# file name: constructions.py

import logging
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from settings.run_config import Provenance
from utils.bicoloring import Bicoloring, Edge, Family, induced_bisects, is_trivial_edge, signed_sum
from utils.myutils import get_config_int
from utils.verifier import CoverageReport, verify_full

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """Consecutive (d/2)-blocks of [n], the leftover short block and its two padded versions."""
    n: int
    d: int
    full_blocks: Tuple[Block, ...]
    short_block: Optional[Block] = None
    padded1: Optional[Block] = None
    padded2: Optional[Block] = None

    @property
    def divisible(self) -> bool:
        return self.short_block is None

    @property
    def block_count(self) -> int:
        """ceil(2n/d): the full blocks plus the short block when there is one."""
        return len(self.full_blocks) + (0 if self.divisible else 1)

    @property
    def pairing_blocks(self) -> Tuple[Block, ...]:
        if self.divisible:
            return self.full_blocks
        return self.full_blocks + (self.padded1, self.padded2)


@dataclass(frozen=True)
class BlockSet:
    n: int
    blocks: Tuple[Block, ...]

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class CircularPerm:
    """A clockwise cyclic order of the n vertices (0-based)."""
    order: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError(f"Circular permutation must list every vertex exactly once: {self.order}")

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def positions(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def dist(self, a: int, b: int) -> int:
        """Clockwise distance from a to b: one more than the number of vertices strictly between them."""
        pos = self.positions
        return (pos[b] - pos[a]) % self.n

    def arrange(self, vertices: Iterable[int]) -> List[int]:
        """Members of `vertices` in clockwise order starting from the first slot."""
        pos = self.positions
        return sorted(vertices, key=lambda v: pos[v])


# --------------------------------------------------------------------------- cycle families

def _rotations(slots: Sequence[int], n: int, d: int) -> List[Bicoloring]:
    """
    Rotate the vertices in `slots` through d+1 fixed slot colors.

    Slots 0..h-1 are +1, slot h is uncolored and slots h+1..d are -1, with h = floor(d/2);
    for even d that is d/2 plus slots, for odd d one fewer plus slot than minus slots.
    Rotation k puts slots[j] into slot (j + k) mod (d+1).
    """
    m = d + 1
    if len(slots) != m:
        raise ValueError(f"A cycle family of order {d} needs {m} vertices, got {len(slots)}")
    h = d // 2
    doubled = list(slots) + list(slots)
    colorings = []
    for k in range(m):
        start = (-k) % m
        pos = doubled[start:start + h]
        neg = doubled[start + h + 1:start + m]
        colorings.append(Bicoloring(n, tuple(sorted(pos)), tuple(sorted(neg))))
    return colorings


def _uncolored_vertex(slots: Sequence[int], d: int, k: int) -> int:
    m = d + 1
    return slots[((-k) % m + d // 2) % m]


def cycle_family(d: int) -> Family:
    """The d+1 rotations of one slot coloring on [d+1]."""
    if d < 2:
        raise ValueError(f"cycle_family needs d >= 2, got d={d}")
    n = d + 1
    colorings = _rotations(range(n), n, d)
    return Family(n, d, colorings, [Provenance.CYCLE] * len(colorings))


def rotation_sequence(d: int, edge: Edge) -> List[int]:
    """c_i = signed_sum(X_{i+1}, edge) for the cycle family of order d."""
    if edge.n != d + 1:
        raise ValueError(f"Edge must live on [{d + 1}], got n={edge.n}")
    return [signed_sum(x, edge) for x in cycle_family(d)]


# --------------------------------------------------------------------------- block machinery

def make_partition(n: int, d: int) -> Partition:
    if d % 2:
        raise ValueError(f"make_partition needs an even order, got d={d}")
    if d < 2:
        raise ValueError(f"make_partition needs d >= 2, got d={d}")
    if n < d:
        raise ValueError(f"make_partition needs at least two blocks to pair (n >= d), got n={n}, d={d}")

    half = d // 2
    count, rest = divmod(n, half)
    full = tuple(tuple(range(i * half, (i + 1) * half)) for i in range(count))
    if rest == 0:
        return Partition(n, d, full)

    short = tuple(range(count * half, n))
    pad = half - rest
    padded1 = tuple(sorted(short + full[0][:pad]))
    padded2 = tuple(sorted(short + full[1][:pad]))
    return Partition(n, d, full, short, padded1, padded2)


def _pair_colorings(p: Partition, n: int, lifted: Tuple[int, ...] = ()) -> List[Bicoloring]:
    """B_{i,j} = +1 on one block, -1 on another; `lifted` vertices join every +1 side."""
    full = p.full_blocks
    pairs: List[Tuple[Block, Block]] = []
    for i in range(len(full)):
        for j in range(i + 1, len(full)):
            pairs.append((full[i], full[j]))
    if not p.divisible:
        pairs.append((full[0], p.padded2))
        for i in range(1, len(full)):
            pairs.append((full[i], p.padded1))

    colorings = []
    for plus, minus in pairs:
        pos = plus + lifted if lifted else plus
        colorings.append(Bicoloring(n, pos, minus))
    return colorings


def pair_bicolorings(p: Partition) -> Family:
    colorings = _pair_colorings(p, p.n)
    return Family(p.n, p.d, colorings, [Provenance.PAIR] * len(colorings))


def blocks(p: Partition) -> BlockSet:
    """D_k = P_{2k-1} + P_{2k} for k < ceil(n/d), then the final union by divisibility and parity."""
    full = p.full_blocks
    total = -(-p.n // p.d)
    result = [tuple(sorted(full[2 * k] + full[2 * k + 1])) for k in range(total - 1)]

    m = p.block_count
    if p.divisible:
        last = full[m - 2] + full[m - 1]
    elif m % 2:
        last = full[0] + p.padded2
    else:
        last = full[m - 2] + p.padded2
    result.append(tuple(sorted(last)))
    return BlockSet(p.n, tuple(result))


def extend_blocks_even(b: BlockSet, n: int) -> List[Block]:
    """Add the smallest vertex outside each block."""
    extended = []
    for block in b.blocks:
        members = set(block)
        if len(members) >= n:
            raise ValueError(f"Block {block} already covers [{n}]; nothing left to add")
        extra = next(v for v in range(n) if v not in members)
        extended.append(tuple(sorted(members | {extra})))
    return extended


def extend_blocks_odd(b: BlockSet, n: int) -> List[Block]:
    """
    Blocks over [n-1] gain vertex n and the vertex after max(D), wrapping inside [n-1].

    If that vertex is already in D the next free one clockwise is taken instead.
    """
    ring = n - 1
    extended = []
    for block in b.blocks:
        members = set(block)
        if len(members) >= ring:
            raise ValueError(f"Block {block} already covers [{ring}]; nothing left to add")
        extra = (max(block) + 1) % ring
        while extra in members:
            extra = (extra + 1) % ring
        extended.append(tuple(sorted(members | {extra, ring})))
    return extended


def compose_on_sets(sets: Sequence[Sequence[int]], n: int, d: int) -> Family:
    family = Family(n, d)
    for s in sets:
        if len(s) != d + 1 or len(set(s)) != d + 1:
            raise ValueError(f"compose_on_sets needs {d + 1} distinct vertices per set, got {tuple(s)}")
        for x in _rotations(sorted(s), n, d):
            family.add(x, Provenance.CYCLE)
    return family


# --------------------------------------------------------------------------- post-processing

def dedup(f: Family, negation: bool = False) -> Family:
    """Drop repeated bicolorings (and, with `negation`, sign-flipped repeats), keeping first occurrences."""
    seen = set()
    out = Family(f.n, f.d)
    for x, label in zip(f.colorings, f.labels):
        key = x.canonical() if negation else x
        if key in seen:
            continue
        seen.add(key)
        out.colorings.append(x)
        out.labels.append(label)
    removed = len(f) - len(out)
    if removed:
        logger.info("dedup removed %d of %d bicolorings (negation=%s)", removed, len(f), negation)
    return out


def patch_coloring(a: Edge, d: int) -> Bicoloring:
    """
    A weight-d coloring bisecting `a`: +1 on its smallest member, -1 on the next.

    The remaining weight goes to the highest vertices outside `a`, alternating signs; whatever
    does not fit outside is placed inside `a` in +/- pairs.
    """
    n = a.n
    inside = list(a.vertices)
    if len(inside) < 2:
        raise RuntimeError(f"Cannot bisect trivial edge {a}")
    rest = d - 2
    outside = [v for v in reversed(range(n)) if not a.mask >> v & 1]
    use_out = min(rest, len(outside))
    use_in = rest - use_out
    if use_in % 2:
        use_out -= 1
        use_in += 1
    if use_out < 0 or use_in > len(inside) - 2:
        raise RuntimeError(f"Cannot reach weight d={d} while bisecting {a} on n={n}")

    pos, neg = [inside[0]], [inside[1]]
    for i, v in enumerate(sorted(outside[:use_out])):
        (pos if i % 2 == 0 else neg).append(v)
    for i, v in enumerate(inside[2:2 + use_in]):
        (pos if i % 2 == 0 else neg).append(v)
    return Bicoloring.from_sets(n, pos, neg)


def patch(f: Family, uncovered: Sequence[Edge]) -> Family:
    out = Family(f.n, f.d, list(f.colorings), list(f.labels))
    for a in uncovered:
        x = patch_coloring(a, f.d)
        logger.warning("patched uncovered edge %s with %s", a, x)
        out.add(x, Provenance.PATCH)
    return out


def _self_check(family: Family, min_edge_size: Optional[int] = None) -> Family:
    """Verify exhaustively when n is small enough and patch whatever is missed."""
    cap = get_config_int("self_check_cap", 20)
    if family.n > cap:
        logger.info("n=%d above self-check cap %d; family emitted without verification", family.n, cap)
        return family

    report = verify_full(family, min_edge_size=min_edge_size, uncovered_cap=None)
    if report.complete:
        return family
    logger.error("construction missed %d edges for (n, d)=(%d, %d)", report.uncovered_total, family.n, family.d)
    patched = patch(family, report.uncovered)
    recheck = verify_full(patched, min_edge_size=min_edge_size, uncovered_cap=0)
    if not recheck.complete:
        raise RuntimeError(f"Patched family still misses {recheck.uncovered_total} edges")
    return patched


def _check_order(n: int, d: int) -> None:
    if not 2 <= d <= n - 1:
        raise ValueError(f"d must lie in [2, n-1], got n={n}, d={d}")


# --------------------------------------------------------------------------- full constructions

def general_family(n: int, d: int, negation_dedup: bool = False, self_check: bool = True) -> Family:
    """Pair colorings plus cycle families on extended block unions, for any 2 <= d <= n-1."""
    _check_order(n, d)
    started = time.perf_counter()

    if d == n - 1:
        family = cycle_family(d)
    elif d % 2 == 0:
        p = make_partition(n, d)
        family = pair_bicolorings(p)
        family.extend(compose_on_sets(extend_blocks_even(blocks(p), n), n, d))
    else:
        p = make_partition(n - 1, d - 1)
        lifted = _pair_colorings(p, n, lifted=(n - 1,))
        family = Family(n, d, lifted, [Provenance.PAIR] * len(lifted))
        family.extend(compose_on_sets(extend_blocks_odd(blocks(p), n), n, d))

    family = dedup(family, negation=negation_dedup)
    if self_check:
        family = _self_check(family)
    logger.info(
        "general_family(n=%d, d=%d): %d bicolorings %s in %.3fs",
        n, d, len(family), family.label_counts(), time.perf_counter() - started,
    )
    return family


def composition_family(n: int, d: int) -> Family:
    """The cycle-family half of general_family, without pair colorings, dedup or checks."""
    _check_order(n, d)
    if d == n - 1:
        return cycle_family(d)
    if d % 2 == 0:
        return compose_on_sets(extend_blocks_even(blocks(make_partition(n, d)), n), n, d)
    return compose_on_sets(extend_blocks_odd(blocks(make_partition(n - 1, d - 1)), n), n, d)


def min_edge_family(n: int, d: int, k: int, negation_dedup: bool = False, self_check: bool = True) -> Family:
    """Only the composed cycle families; enough when every edge has at least k vertices and (d-1)k > n-1."""
    _check_order(n, d)
    if (d - 1) * k <= n - 1:
        raise ValueError(f"min_edge_family requires (d-1)k > n-1, got n={n}, d={d}, k={k}")

    family = dedup(composition_family(n, d), negation=negation_dedup)
    if self_check:
        family = _self_check(family, min_edge_size=k)
    return family


# --------------------------------------------------------------------------- circular pivot

def pivot_holds(sigma: CircularPerm, a: Edge, i: int) -> bool:
    ordered = sigma.arrange(a.vertices)
    k = len(ordered)
    half = k // 2
    first = sigma.dist(ordered[i], ordered[(i + half) % k])
    second = sigma.dist(ordered[(i + half + 1) % k], ordered[i])
    return 2 * first < sigma.n and 2 * second < sigma.n


def _pivot_by_rotation(sigma: CircularPerm, a: Edge) -> Optional[int]:
    d = sigma.n - 1
    for k, x in enumerate(_rotations(sigma.order, sigma.n, d)):
        if induced_bisects(x, a):
            ordered = sigma.arrange(a.vertices)
            return ordered.index(_uncolored_vertex(sigma.order, d, k))
    return None


def find_pivot(sigma: CircularPerm, a: Edge, method: str = "scan") -> int:
    """
    Index i of the clockwise ordering (a_0, ..., a_{k-1}) of an odd subset of an odd cycle with
    dist(a_i, a_{i+k//2}) < n/2 and dist(a_{i+k//2+1}, a_i) < n/2.
    """
    n = sigma.n
    if a.n != n:
        raise ValueError(f"Dimension mismatch: permutation has n={n}, subset has n={a.n}")
    if n % 2 == 0:
        raise ValueError(f"find_pivot needs odd n, got n={n}")
    if a.size % 2 == 0 or is_trivial_edge(a, n - 1):
        raise ValueError(f"find_pivot needs a non-trivial odd subset, got {a}")
    if method not in ("scan", "rotation"):
        raise ValueError(f"Unknown pivot method {method!r}")

    if method == "rotation":
        i = _pivot_by_rotation(sigma, a)
        if i is not None and pivot_holds(sigma, a, i):
            return i
        logger.warning("rotation pivot failed for %s; falling back to scan", a)

    for i in range(a.size):
        if pivot_holds(sigma, a, i):
            return i
    raise RuntimeError(f"No pivot index exists for {a} under {sigma.order}")

# Description: exact minimum family size on small instances, found by depth-first set-cover
# search over every weight-d coloring (one per sign-negation pair).
# file name: exact_search.py

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from math import comb
from typing import Any, Dict, List, Optional

import numpy as np

from settings.run_config import Budget, Provenance
from utils.bicoloring import Bicoloring, Edge, Family, Hypergraph, is_trivial_point
from utils.bounds import lower_bound
from utils.myutils import get_config_int

logger = logging.getLogger(__name__)


class SearchStatus(Enum):
    OPTIMAL = "optimal"
    LOWER_BOUND_ONLY = "lower_bound_only"
    TIMEOUT = "timeout"


@dataclass
class SearchResult:
    n: int
    d: int
    status: SearchStatus
    value: int
    witness: Optional[Family] = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    refuted: List[int] = field(default_factory=list)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "status": self.status.value,
            "value": self.value,
            "nodes_explored": self.nodes_explored,
            "elapsed": round(self.elapsed, 6),
            "refuted": list(self.refuted),
            "witness_size": len(self.witness) if self.witness is not None else None,
        }


class _BudgetExhausted(Exception):
    pass


def enumerate_candidates(n: int, d: int) -> List[Bicoloring]:
    """Every weight-d coloring whose first non-zero entry is +1: C(n, d) * 2^(d-1) of them."""
    if n < 2 or not 2 <= d <= n:
        raise ValueError(f"enumerate_candidates needs 2 <= d <= n, got n={n}, d={d}")
    out = []
    for support in combinations(range(n), d):
        head, tail = support[0], support[1:]
        for signs in product((1, -1), repeat=d - 1):
            pos = [head] + [v for v, s in zip(tail, signs) if s == 1]
            neg = [v for v, s in zip(tail, signs) if s == -1]
            out.append(Bicoloring(n, tuple(pos), tuple(neg)))
    return out


def _nontrivial_masks(n: int, d: int) -> List[int]:
    return [e.mask for e in Hypergraph.complete(n).edges if not is_trivial_point(e, d)]


def _coverage_bitsets(candidates: List[Bicoloring], masks: List[int], n: int) -> List[int]:
    """For each candidate, the set of universe indices it bisects, as a Python int."""
    edge_bits = ((np.asarray(masks, dtype=np.int64)[:, None] >> np.arange(n)) & 1).astype(np.float32)
    signs = np.array([x.signs for x in candidates], dtype=np.float32).T
    sums = edge_bits @ signs
    hits = edge_bits @ np.abs(signs)
    covers = (sums == 0) & (hits > 0)
    out = []
    for j in range(covers.shape[1]):
        packed = np.packbits(covers[:, j], bitorder="little")
        out.append(int.from_bytes(packed.tobytes(), "little"))
    return out


class _CoverSearch:
    """Is there a cover of `full` by at most k of `sets`? Branches on the hardest uncovered element."""

    def __init__(self, sets: List[int], universe: int, budget: Budget, started: float):
        self.sets = sets
        self.universe = universe
        self.full = (1 << universe) - 1
        self.budget = budget
        self.started = started
        self.nodes = 0
        self.by_element = [[j for j, s in enumerate(sets) if s >> e & 1] for e in range(universe)]
        self.best_cover = max((s.bit_count() for s in sets), default=0)
        self.failed: Dict[int, int] = {}

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget.nodes is not None and self.nodes > self.budget.nodes:
            raise _BudgetExhausted()
        if self.budget.seconds is not None and self.nodes % 1024 == 0:
            if time.perf_counter() - self.started > self.budget.seconds:
                raise _BudgetExhausted()

    def _pick_element(self, covered: int) -> int:
        best, best_count = -1, None
        rest = self.full & ~covered
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            count = len(self.by_element[e])
            if best_count is None or count < best_count:
                best, best_count = e, count
                if count <= 1:
                    break
            rest ^= low
        return best

    def solve(self, k: int) -> Optional[List[int]]:
        return self._dfs(0, k, [])

    def _dfs(self, covered: int, left: int, chosen: List[int]) -> Optional[List[int]]:
        self._tick()
        if covered == self.full:
            return list(chosen)
        missing = (self.full & ~covered).bit_count()
        if left == 0 or self.best_cover == 0 or -(-missing // self.best_cover) > left:
            return None
        if self.failed.get(covered, -1) >= left:
            return None

        e = self._pick_element(covered)
        for j in self.by_element[e]:
            chosen.append(j)
            found = self._dfs(covered | self.sets[j], left - 1, chosen)
            chosen.pop()
            if found is not None:
                return found
        self.failed[covered] = max(self.failed.get(covered, -1), left)
        return None


def exact_beta(n: int, d: int, budget: Optional[Budget] = None,
               candidate_cap: Optional[int] = None, universe_cap: Optional[int] = None) -> SearchResult:
    """Smallest family size covering every non-trivial point, trying k = lower_best, lower_best + 1, ..."""
    budget = budget or Budget()
    lower = lower_bound(n, d).lower_best
    candidate_cap = candidate_cap or get_config_int("candidate_cap", 5000)
    universe_cap = universe_cap or get_config_int("universe_cap", 4096)

    candidate_count = comb(n, d) * 2 ** (d - 1)
    universe_size = (1 << n) - n - 1 - (1 if d % 2 else 0)
    if candidate_count > candidate_cap or universe_size > universe_cap:
        raise ValueError(
            f"Instance (n={n}, d={d}) has {candidate_count} candidates and {universe_size} points; "
            f"caps are {candidate_cap} and {universe_cap}"
        )

    started = time.perf_counter()
    candidates = enumerate_candidates(n, d)
    masks = _nontrivial_masks(n, d)
    sets = _coverage_bitsets(candidates, masks, n)
    search = _CoverSearch(sets, len(masks), budget, started)
    for e, hitters in enumerate(search.by_element):
        if not hitters:
            raise ValueError(f"No weight-{d} coloring bisects {Edge(n, masks[e]).to_braces()}; no family exists")

    refuted: List[int] = []
    k = lower
    try:
        while budget.max_k is None or k <= budget.max_k:
            logger.info("exact (n=%d, d=%d): trying k=%d", n, d, k)
            picks = search.solve(k)
            if picks is not None:
                witness = Family(n, d, [candidates[j] for j in picks], [Provenance.SEARCH] * len(picks))
                return SearchResult(n, d, SearchStatus.OPTIMAL, k, witness, search.nodes,
                                    time.perf_counter() - started, refuted)
            refuted.append(k)
            k += 1
    except _BudgetExhausted:
        logger.warning("exact (n=%d, d=%d): budget exhausted at k=%d after %d nodes", n, d, k, search.nodes)

    elapsed = time.perf_counter() - started
    if refuted:
        return SearchResult(n, d, SearchStatus.LOWER_BOUND_ONLY, refuted[-1] + 1, None, search.nodes, elapsed, refuted)
    return SearchResult(n, d, SearchStatus.TIMEOUT, lower, None, search.nodes, elapsed, refuted)

# Description: checks a family against every non-trivial point of the cube (exhaustively or by
# seeded sampling) or against an explicit hypergraph, and reports what was missed.
# file name: verifier.py

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from settings.run_config import VerifyMode
from utils.bicoloring import Bicoloring, Edge, Family, Hypergraph, is_trivial_edge
from utils.myutils import get_config_int, worker_count

logger = logging.getLogger(__name__)

CONFIGURED = -1
DENSE_LIMIT = 1 << 22
CHUNK_CELLS = 1 << 22
POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


@dataclass
class CoverageReport:
    n: int
    d: int
    universe_size: int
    covered: int
    uncovered: List[Edge] = field(default_factory=list)
    uncovered_total: int = 0
    mode: VerifyMode = VerifyMode.EXHAUSTIVE
    sample_count: Optional[int] = None
    seed: Optional[int] = None
    trivial_skipped: int = 0

    @property
    def complete(self) -> bool:
        return self.uncovered_total == 0

    @property
    def coverage(self) -> float:
        return self.covered / self.universe_size if self.universe_size else 1.0

    def as_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "mode": self.mode.value,
            "complete": self.complete,
            "universe_size": self.universe_size,
            "covered": self.covered,
            "uncovered_total": self.uncovered_total,
            "coverage": round(self.coverage, 6),
            "sample_count": self.sample_count,
            "seed": self.seed,
            "trivial_skipped": self.trivial_skipped,
            "uncovered": [e.to_bits() for e in self.uncovered],
        }


def bisected_pairs_count(x: Bicoloring) -> int:
    """Number of 2-subsets {a, b} that x bisects: one vertex from each color class."""
    return len(x.pos) * len(x.neg)


def max_bisected_pairs(d: int) -> int:
    return d * d // 4


# --------------------------------------------------------------------------- coverage kernels

def _sign_matrices(family: Family) -> Tuple[np.ndarray, np.ndarray]:
    signs = np.zeros((family.n, len(family)), dtype=np.float32)
    for j, x in enumerate(family):
        signs[list(x.pos), j] = 1.0
        signs[list(x.neg), j] = -1.0
    return signs, np.abs(signs)


def _covered_dense(bits: np.ndarray, signs: np.ndarray, support: np.ndarray) -> np.ndarray:
    if signs.shape[1] == 0:
        return np.zeros(bits.shape[0], dtype=bool)
    sums = bits @ signs
    hits = bits @ support
    return ((sums == 0) & (hits > 0)).any(axis=1)


class _SparseColumns:
    """Byte offsets and bit shifts of each coloring's support, built on first use."""

    def __init__(self, family: Family):
        self.family = family
        self.cache: Dict[int, Tuple[np.ndarray, np.ndarray, int]] = {}

    def __getitem__(self, j: int) -> Tuple[np.ndarray, np.ndarray, int]:
        entry = self.cache.get(j)
        if entry is None:
            x = self.family[j]
            cols = np.asarray(x.pos + x.neg, dtype=np.int64)
            entry = (cols >> 3, (cols & 7).astype(np.uint8), len(x.pos))
            self.cache[j] = entry
        return entry


def _covered_sparse(packed: np.ndarray, columns: _SparseColumns) -> np.ndarray:
    """Walk the family in order, retiring rows as soon as one coloring bisects them."""
    covered = np.zeros(packed.shape[0], dtype=bool)
    remaining = np.arange(packed.shape[0])
    for j in range(len(columns.family)):
        if remaining.size == 0:
            break
        byte_idx, shift, plus = columns[j]
        sub = (packed[np.ix_(remaining, byte_idx)] >> shift) & 1
        sub = sub.astype(np.int32)
        balance = sub[:, :plus].sum(axis=1) - sub[:, plus:].sum(axis=1)
        ok = (balance == 0) & (sub.any(axis=1))
        covered[remaining[ok]] = True
        remaining = remaining[~ok]
    return covered


def _covered_packed(packed: np.ndarray, family: Family, columns: Optional[_SparseColumns] = None) -> np.ndarray:
    if family.n * max(len(family), 1) <= DENSE_LIMIT:
        bits = np.unpackbits(packed, axis=1, bitorder="little")[:, :family.n].astype(np.float32)
        signs, support = _sign_matrices(family)
        return _covered_dense(bits, signs, support)
    return _covered_sparse(packed, columns or _SparseColumns(family))


def _pack_edges(edges: Sequence[Edge], n: int) -> np.ndarray:
    width = (n + 7) // 8
    raw = b"".join(e.mask.to_bytes(width, "little") for e in edges)
    return np.frombuffer(raw, dtype=np.uint8).reshape(len(edges), width).copy()


def _unpack_row(row: np.ndarray, n: int) -> Edge:
    return Edge(n, int.from_bytes(row.tobytes(), "little"))


def _resolve_cap(uncovered_cap: Optional[int]) -> Optional[int]:
    if uncovered_cap == CONFIGURED:
        return get_config_int("uncovered_cap", 64)
    return uncovered_cap


# --------------------------------------------------------------------------- exhaustive

def _exhaustive_chunk(lo: int, hi: int, family: Family, signs, support, min_size: int, cap: Optional[int]):
    n, d = family.n, family.d
    masks = np.arange(lo, hi, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.float32)
    sizes = bits.sum(axis=1)
    keep = sizes >= max(2, min_size)
    if d % 2:
        keep &= sizes != n
    ok = _covered_dense(bits, signs, support)
    missed = masks[keep & ~ok]
    listed = missed if cap is None else missed[:cap]
    return int(keep.sum()), int((keep & ok).sum()), int(missed.size), [int(m) for m in listed]


def _verify_exhaustive(family: Family, min_size: int, cap: Optional[int], workers: int) -> CoverageReport:
    n = family.n
    limit = get_config_int("exhaustive_cap", 30)
    if n > limit:
        raise ValueError(f"Exhaustive verification is capped at n={limit}, got n={n}; use sampled mode")

    signs, support = _sign_matrices(family)
    total = 1 << n
    chunk = max(1 << 10, CHUNK_CELLS // max(len(family), n, 1))
    bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    logger.debug("exhaustive check of %d points in %d chunks, %d workers", total, len(bounds), workers)

    def run(span):
        return _exhaustive_chunk(span[0], span[1], family, signs, support, min_size, cap)

    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, bounds))
    else:
        parts = [run(span) for span in bounds]

    report = CoverageReport(n, family.d, 0, 0)
    for universe, covered, missed, listed in parts:
        report.universe_size += universe
        report.covered += covered
        report.uncovered_total += missed
        room = None if cap is None else cap - len(report.uncovered)
        if room is None or room > 0:
            report.uncovered.extend(Edge(n, m) for m in listed[:room])
    return report


# --------------------------------------------------------------------------- sampled

def _size_law(n: int, d: int, min_size: int) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    Sizes a sampled point may take, their probabilities under a uniform draw conditioned on being
    non-trivial, and the acceptance rate of plain rejection sampling.
    """
    lo = max(2, min_size)
    hi = n - 1 if d % 2 else n
    if lo > hi:
        raise ValueError(f"No non-trivial subset of [{n}] has size >= {min_size} for d={d}")
    j = np.arange(1, n + 1, dtype=np.float64)
    log_binom = np.concatenate(([0.0], np.cumsum(np.log(n - j + 1) - np.log(j))))
    allowed = log_binom[lo:hi + 1]
    top = allowed.max()
    weights = np.exp(allowed - top)
    total = weights.sum()
    rate = float(np.exp(top + np.log(total) - n * np.log(2.0)))
    return np.arange(lo, hi + 1), weights / total, rate


def _admissible(draw: np.ndarray, n: int, d: int, lo: int) -> np.ndarray:
    """Rows of `draw` with at least `lo` ones, excluding [n] itself for odd d."""
    if lo > 2 or draw.shape[1] < 2:
        sizes = POPCOUNT[draw].sum(axis=1, dtype=np.int64)
        ok = sizes >= lo
        if d % 2:
            ok &= sizes != n
        return ok
    # two non-zero bytes already hold two ones; only the remaining rows are counted
    ok = np.count_nonzero(draw, axis=1) >= 2
    unsure = np.flatnonzero(~ok)
    if unsure.size:
        ok[unsure] = POPCOUNT[draw[unsure]].sum(axis=1, dtype=np.int64) >= lo
    if d % 2:
        full = np.flatnonzero(draw[:, 0] == 0xFF)
        if full.size:
            ok[full] &= POPCOUNT[draw[full]].sum(axis=1, dtype=np.int64) != n
    return ok


def _rejection_rows(rng: np.random.Generator, count: int, n: int, d: int, lo: int) -> np.ndarray:
    width = (n + 7) // 8
    tail_mask = np.uint8((1 << (n - 8 * (width - 1))) - 1)
    kept: List[np.ndarray] = []
    need = count
    while need > 0:
        draw = np.frombuffer(rng.bytes(need * width), dtype=np.uint8).reshape(need, width).copy()
        draw[:, -1] &= tail_mask
        ok = _admissible(draw, n, d, lo)
        kept.append(draw[ok])
        need -= int(ok.sum())
    return np.concatenate(kept)[:count]


def _conditioned_rows(rng: np.random.Generator, count: int, n: int, sizes: np.ndarray,
                      probs: np.ndarray) -> np.ndarray:
    """Draw a size from the conditioned law, then a uniform subset of that size."""
    chosen = rng.choice(sizes, size=count, p=probs)
    step = max(1, (1 << 22) // n)
    out: List[np.ndarray] = []
    for start in range(0, count, step):
        part = chosen[start:start + step]
        order = rng.random((part.shape[0], n)).argsort(axis=1)
        take = np.arange(n)[None, :] < part[:, None]
        bits = np.zeros((part.shape[0], n), dtype=np.uint8)
        bits[np.nonzero(take)[0], order[take]] = 1
        out.append(np.packbits(bits, axis=1, bitorder="little"))
    return np.concatenate(out)


def _sample_rows(rng: np.random.Generator, count: int, n: int, d: int, min_size: int,
                 law: Optional[Tuple[np.ndarray, np.ndarray, float]] = None) -> np.ndarray:
    """`count` uniform non-trivial subsets of [n] with at least `min_size` ones, packed little-endian."""
    sizes, probs, rate = law or _size_law(n, d, min_size)
    if rate >= 0.5:
        return _rejection_rows(rng, count, n, d, int(sizes[0]))
    return _conditioned_rows(rng, count, n, sizes, probs)


def _verify_sampled(family: Family, samples: int, seed: int, min_size: int,
                    cap: Optional[int], workers: int) -> CoverageReport:
    n = family.n
    width = (n + 7) // 8
    batch = max(64, min(65_536, (1 << 23) // width))
    sizes = [min(batch, samples - lo) for lo in range(0, samples, batch)]
    streams = np.random.SeedSequence(seed).spawn(len(sizes))
    law = _size_law(n, family.d, min_size)
    columns = _SparseColumns(family)
    logger.debug("sampled check: %d samples in %d batches, seed=%d, acceptance=%.3g",
                 samples, len(sizes), seed, law[2])

    def run(args):
        size, stream = args
        rows = _sample_rows(np.random.default_rng(stream), size, n, family.d, min_size, law)
        covered = _covered_packed(rows, family, columns)
        return rows[~covered]

    jobs = list(zip(sizes, streams))
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            misses = list(pool.map(run, jobs))
    else:
        misses = [run(job) for job in jobs]

    report = CoverageReport(n, family.d, samples, samples, mode=VerifyMode.SAMPLED,
                            sample_count=samples, seed=seed)
    for rows in misses:
        report.uncovered_total += rows.shape[0]
        for row in rows:
            if cap is not None and len(report.uncovered) >= cap:
                break
            report.uncovered.append(_unpack_row(row, n))
    report.covered -= report.uncovered_total
    return report


# --------------------------------------------------------------------------- entry points

def verify_full(f: Family, mode: VerifyMode = VerifyMode.EXHAUSTIVE, samples: Optional[int] = None,
                seed: int = 0, min_edge_size: Optional[int] = None,
                uncovered_cap: Optional[int] = CONFIGURED, workers: Optional[int] = None) -> CoverageReport:
    """
    Check every non-trivial point of {0,1}^n (or `samples` uniform ones) against the family.

    `min_edge_size` narrows the universe to points with at least that many ones. `uncovered_cap`
    bounds the listed misses (None lists all); the total is always exact for what was examined.
    """
    cap = _resolve_cap(uncovered_cap)
    min_size = min_edge_size or 0
    workers = workers or worker_count()
    if mode is VerifyMode.EXHAUSTIVE:
        report = _verify_exhaustive(f, min_size, cap, workers)
    else:
        count = samples if samples is not None else get_config_int("default_samples", 1_000_000)
        if count < 1:
            raise ValueError(f"Sample count must be positive, got {count}")
        report = _verify_sampled(f, count, seed, min_size, cap, workers)
    logger.info("verify (n=%d, d=%d, %s): %d/%d covered", f.n, f.d, mode.value, report.covered, report.universe_size)
    return report


def verify_hypergraph(f: Family, g: Hypergraph, uncovered_cap: Optional[int] = CONFIGURED) -> CoverageReport:
    if f.n != g.n:
        raise ValueError(f"Dimension mismatch: family has n={f.n}, hypergraph has n={g.n}")
    cap = _resolve_cap(uncovered_cap)
    edges = [e for e in g.edges if not is_trivial_edge(e, f.d)]
    report = CoverageReport(f.n, f.d, len(edges), 0, trivial_skipped=len(g.edges) - len(edges))
    if not edges:
        return report

    covered = _covered_packed(_pack_edges(edges, f.n), f)
    report.covered = int(covered.sum())
    missed = [e for e, ok in zip(edges, covered) if not ok]
    report.uncovered_total = len(missed)
    report.uncovered = missed if cap is None else missed[:cap]
    return report

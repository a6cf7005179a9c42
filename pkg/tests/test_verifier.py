import random

import numpy as np
import pytest

from conftest import bc, edge, fam
from settings.run_config import Provenance, VerifyMode
from utils.bicoloring import Bicoloring, Edge, Family, Hypergraph, induced_bisects
from utils.constructions import cycle_family, general_family
from utils.verifier import (
    _admissible,
    _sample_rows,
    bisected_pairs_count,
    max_bisected_pairs,
    verify_full,
    verify_hypergraph,
)


class TestVerifyFull:
    def test_cycle_family_order_two(self):
        report = verify_full(cycle_family(2))
        assert report.complete
        assert report.universe_size == 4
        assert report.coverage == 1.0

    def test_single_coloring_misses(self):
        report = verify_full(fam("+-0"))
        assert not report.complete
        assert set(report.uncovered) == {edge(3, 1, 3), edge(3, 2, 3)}
        assert report.uncovered_total == 2

    def test_missing_rotation(self):
        full = cycle_family(4)
        f = Family(5, 4, full.colorings[:4], full.labels[:4])
        report = verify_full(f)
        assert not report.complete
        assert all(not induced_bisects(x, a) for a in report.uncovered for x in f)

    def test_odd_order_skips_whole_set(self):
        report = verify_full(cycle_family(3))
        assert report.universe_size == 16 - 1 - 4 - 1
        assert report.complete

    def test_uncovered_cap(self):
        f = fam("+-00000")
        report = verify_full(f, uncovered_cap=3)
        assert len(report.uncovered) == 3
        assert report.uncovered_total > 3

    def test_min_edge_size(self):
        report = verify_full(fam("+-0"), min_edge_size=3)
        assert report.universe_size == 1
        assert report.complete

    def test_exhaustive_cap(self, monkeypatch):
        f = general_family(8, 4)
        monkeypatch.setenv("IBF_EXHAUSTIVE_CAP", "6")
        with pytest.raises(ValueError, match="sampled mode"):
            verify_full(f)

    def test_sampled_is_reproducible(self):
        f = fam("+-00000000")
        first = verify_full(f, VerifyMode.SAMPLED, samples=500, seed=7)
        second = verify_full(f, VerifyMode.SAMPLED, samples=500, seed=7)
        assert first.uncovered_total == second.uncovered_total
        assert first.uncovered == second.uncovered
        assert first.sample_count == 500
        assert first.seed == 7
        assert not first.complete

    def test_sampled_complete_family(self):
        report = verify_full(general_family(24, 6), VerifyMode.SAMPLED, samples=3000, seed=1)
        assert report.complete
        assert report.universe_size == 3000

    def test_sampled_misses_are_real(self):
        f = general_family(40, 8, self_check=False)
        f = Family(f.n, f.d, f.colorings[:5], f.labels[:5])
        report = verify_full(f, VerifyMode.SAMPLED, samples=400, seed=3)
        assert report.uncovered_total > 0
        for a in report.uncovered:
            assert a.size >= 2
            assert not any(induced_bisects(x, a) for x in f)

    def test_sampled_misses_are_exhaustive_misses(self):
        f = general_family(12, 4)
        f = Family(f.n, f.d, f.colorings[:6], f.labels[:6])
        everything = verify_full(f, uncovered_cap=None)
        sampled = verify_full(f, VerifyMode.SAMPLED, samples=2000, seed=5, uncovered_cap=None)
        assert not everything.complete
        assert set(sampled.uncovered) <= set(everything.uncovered)
        assert sampled.uncovered_total == len(sampled.uncovered)

    def test_member_order_does_not_matter(self):
        f = general_family(12, 4)
        f = Family(f.n, f.d, f.colorings[:8], f.labels[:8])
        flipped = Family(f.n, f.d, f.colorings[::-1], f.labels[::-1])
        forward = verify_full(f, uncovered_cap=None)
        backward = verify_full(flipped, uncovered_cap=None)
        assert set(forward.uncovered) == set(backward.uncovered)
        assert forward.uncovered_total == backward.uncovered_total
        assert forward.covered == backward.covered

    def test_sampled_near_full_min_edge_size(self):
        f = general_family(60, 6, self_check=False)
        report = verify_full(f, VerifyMode.SAMPLED, samples=300, seed=2, min_edge_size=57, uncovered_cap=None)
        assert report.universe_size == 300
        assert all(a.size >= 57 for a in report.uncovered)

    @pytest.mark.parametrize("n, d, min_size", [(12, 3, 12), (12, 4, 13)])
    def test_sampled_impossible_min_edge_size(self, n, d, min_size):
        f = general_family(n, d)
        with pytest.raises(ValueError, match="No non-trivial subset"):
            verify_full(f, VerifyMode.SAMPLED, samples=10, min_edge_size=min_size)

    def test_as_dict(self):
        fields = verify_full(cycle_family(2)).as_dict()
        assert fields["complete"] is True
        assert fields["mode"] == "exhaustive"
        assert fields["uncovered"] == []


class TestVerifyHypergraph:
    def test_single_edge(self):
        g = Hypergraph(4, (edge(4, 1, 2),))
        assert verify_hypergraph(fam("+-00"), g).complete

    def test_pairs_on_two_supports(self):
        g = Hypergraph(4, tuple(edge(4, a, b) for a in range(1, 5) for b in range(a + 1, 5)))
        report = verify_hypergraph(fam("+-00", "+0-0"), g)
        assert not report.complete
        assert set(report.uncovered) == {edge(4, 1, 4), edge(4, 2, 3), edge(4, 2, 4), edge(4, 3, 4)}

    def test_trivial_edges_only(self):
        g = Hypergraph(4, (Edge(4, 0), edge(4, 2)))
        report = verify_hypergraph(fam("+-00"), g)
        assert report.complete
        assert report.universe_size == 0
        assert report.trivial_skipped == 2

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="Dimension mismatch"):
            verify_hypergraph(fam("+-00"), Hypergraph(5))

    def test_wide_family_uses_sparse_kernel(self):
        f = general_family(3000, 1000, self_check=False)
        rng = random.Random(5)
        edges = [Edge.from_vertices(3000, rng.sample(range(3000), rng.randint(2, 50))) for _ in range(40)]
        assert verify_hypergraph(f, Hypergraph(3000, tuple(edges))).complete


class TestSampleRows:
    @staticmethod
    def sizes(rows):
        return np.unpackbits(rows, axis=1).sum(axis=1)

    def test_rare_sizes_are_drawn_directly(self):
        rows = _sample_rows(np.random.default_rng(0), 500, 200, 4, 190)
        assert rows.shape == (500, 25)
        assert self.sizes(rows).min() >= 190

    def test_odd_order_never_draws_whole_set(self):
        rows = _sample_rows(np.random.default_rng(1), 200, 10, 3, 9)
        assert set(self.sizes(rows).tolist()) == {9}

    def test_common_sizes(self):
        rows = _sample_rows(np.random.default_rng(2), 1000, 13, 4, 0)
        assert rows.shape == (1000, 2)
        assert self.sizes(rows).min() >= 2
        assert not (rows[:, 1] & 0xE0).any()

    @pytest.mark.parametrize("d, expected", [(3, [False, True, False, True]), (4, [False, True, True, True])])
    def test_admissible_rows(self, d, expected):
        draw = np.array([[1, 0], [3, 0], [255, 255], [1, 1]], dtype=np.uint8)
        assert _admissible(draw, 16, d, 2).tolist() == expected

    def test_same_seed_same_rows(self):
        first = _sample_rows(np.random.default_rng(3), 50, 40, 6, 30)
        second = _sample_rows(np.random.default_rng(3), 50, 40, 6, 30)
        assert (first == second).all()


class TestBisectedPairs:
    @pytest.mark.parametrize("x, expected", [("++--0", 4), ("+---0", 3), ("+-000", 1)])
    def test_examples(self, x, expected):
        assert bisected_pairs_count(bc(x)) == expected

    @pytest.mark.parametrize("n, d", [(10, 4), (12, 6)])
    def test_random_colorings(self, n, d):
        rng = random.Random(n * d)
        for _ in range(10_000):
            support = rng.sample(range(n), d)
            plus = rng.randint(0, d)
            x = Bicoloring.from_sets(n, support[:plus], support[plus:])
            count = bisected_pairs_count(x)
            assert count <= max_bisected_pairs(d)
            assert (count == max_bisected_pairs(d)) == (len(x.pos) == len(x.neg))

    def test_matches_direct_count(self):
        x = bc("+-+-0-+0")
        direct = sum(
            induced_bisects(x, Edge.from_vertices(8, (a, b)))
            for a in range(8) for b in range(a + 1, 8)
        )
        assert bisected_pairs_count(x) == direct


def test_labels_survive_verification():
    f = cycle_family(4)
    verify_full(f)
    assert f.count(Provenance.CYCLE) == 5

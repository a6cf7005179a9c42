from math import comb

import pytest

from settings.run_config import Budget, Provenance
from utils.bounds import lower_bound
from utils.constructions import general_family
from utils.exact_search import SearchStatus, _nontrivial_masks, enumerate_candidates, exact_beta
from utils.verifier import verify_full


class TestCandidates:
    @pytest.mark.parametrize("n, d, expected", [(3, 2, 6), (5, 4, 40), (4, 3, 16)])
    def test_counts(self, n, d, expected):
        candidates = enumerate_candidates(n, d)
        assert len(candidates) == expected == comb(n, d) * 2 ** (d - 1)
        assert len(set(candidates)) == expected

    def test_one_per_negation_pair(self):
        candidates = enumerate_candidates(4, 2)
        assert all(x.canonical() == x for x in candidates)
        assert not any(x.negated() in set(candidates) for x in candidates)

    @pytest.mark.parametrize("n, d", [(3, 2), (4, 3), (5, 4), (6, 5)])
    def test_point_universe(self, n, d):
        masks = _nontrivial_masks(n, d)
        assert len(masks) == (1 << n) - n - 1 - d % 2
        assert all(bin(m).count("1") >= 2 for m in masks)
        assert ((1 << n) - 1 in masks) == (d % 2 == 0)


class TestExactBeta:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_order_two_needs_every_pair(self, n):
        result = exact_beta(n, 2)
        assert result.status is SearchStatus.OPTIMAL
        assert result.value == comb(n, 2)

    @pytest.mark.parametrize("d", [2, 4])
    def test_even_cycle_is_optimal(self, d):
        result = exact_beta(d + 1, d)
        assert result.status is SearchStatus.OPTIMAL
        assert result.value == d + 1

    def test_odd_cycle_bracket(self):
        result = exact_beta(4, 3)
        assert result.status is SearchStatus.OPTIMAL
        assert result.value in (3, 4)

    def test_odd_cycle_bracket_order_five(self):
        result = exact_beta(6, 5)
        assert result.status is SearchStatus.OPTIMAL
        assert result.value in (5, 6)

    def test_witness_is_complete(self):
        result = exact_beta(5, 4)
        assert len(result.witness) == result.value
        assert set(result.witness.labels) == {Provenance.SEARCH}
        assert verify_full(result.witness).complete

    @pytest.mark.parametrize("n, d", [(4, 2), (4, 3), (5, 4)])
    def test_sandwiched_by_bounds(self, n, d):
        self._check_sandwich(n, d)

    @pytest.mark.slow
    def test_sandwiched_by_bounds_odd(self):
        self._check_sandwich(5, 3)

    @staticmethod
    def _check_sandwich(n, d):
        result = exact_beta(n, d)
        assert result.status is SearchStatus.OPTIMAL
        assert lower_bound(n, d).lower_best <= result.value <= len(general_family(n, d))

    def test_refuted_sizes_recorded(self):
        result = exact_beta(5, 4)
        assert result.refuted == list(range(lower_bound(5, 4).lower_best, 5))

    def test_node_budget_yields_lower_bound(self):
        result = exact_beta(5, 4, Budget(nodes=40))
        assert result.status in (SearchStatus.LOWER_BOUND_ONLY, SearchStatus.TIMEOUT)
        assert result.witness is None
        assert result.value >= lower_bound(5, 4).lower_best
        if result.status is SearchStatus.LOWER_BOUND_ONLY:
            assert result.value == result.refuted[-1] + 1

    def test_max_k_stops_early(self):
        result = exact_beta(5, 4, Budget(max_k=3))
        assert result.status is SearchStatus.LOWER_BOUND_ONLY
        assert result.value == 4
        assert result.refuted == [3]

    def test_guardrail(self):
        with pytest.raises(ValueError, match="caps"):
            exact_beta(12, 6)

    def test_odd_subsets_unreachable_at_full_weight(self):
        with pytest.raises(ValueError, match="no family exists"):
            exact_beta(4, 4)

    def test_full_weight_on_three_vertices(self):
        result = exact_beta(3, 3)
        assert result.status is SearchStatus.OPTIMAL
        assert result.value == 2

    def test_as_dict(self):
        fields = exact_beta(3, 2).as_dict()
        assert fields["status"] == "optimal"
        assert fields["value"] == 3
        assert fields["witness_size"] == 3

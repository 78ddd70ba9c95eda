from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import kendalltau

from src.core import (InvalidInputError, Ranking, Swap, VotingInstance, adjacent_swaps, all_rankings, apply_swap,
                      bubble_swap_path, count_inversions, disagreement_set, good_swaps, is_good_swap,
                      kendall_distance, leftmost_good_swap, prefers)
from tests.conftest import blocks, rankings


@st.composite
def ranking_pairs(draw, max_m=8):
    m = draw(st.integers(1, max_m))
    return draw(rankings(m)), draw(rankings(m))


@st.composite
def ranking_triples(draw, max_m=8):
    m = draw(st.integers(1, max_m))
    return draw(rankings(m)), draw(rankings(m)), draw(rankings(m))


def brute_force_distance(a: Ranking, b: Ranking) -> int:
    return sum(1 for x, y in combinations(range(1, a.m + 1), 2)
               if (a.rank(x) < a.rank(y)) != (b.rank(x) < b.rank(y)))


class TestRanking:
    def test_rejects_duplicates(self):
        with pytest.raises(InvalidInputError, match="appears twice"):
            Ranking((1, 2, 2))

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidInputError, match="out of range"):
            Ranking((1, 4, 2))

    @pytest.mark.parametrize("order", [(1.9, 2), (1, 2.5), ("1", "2"), (True, 2)])
    def test_rejects_non_integer_entries(self, order):
        with pytest.raises(InvalidInputError, match="must be integers"):
            Ranking(order)

    def test_accepts_integral_values(self):
        assert Ranking((2.0, 1.0)) == Ranking((2, 1))

    def test_rejects_empty(self):
        with pytest.raises(InvalidInputError):
            Ranking(())

    def test_rank_is_one_based(self):
        r = Ranking((3, 1, 2))
        assert [r.rank(c) for c in (1, 2, 3)] == [2, 3, 1]

    def test_str_and_blocks(self):
        r = blocks([1, 2, 3], [6, 4, 5])
        assert str(r) == "[1,2,3,6,4,5]"
        assert r.to_list() == [1, 2, 3, 6, 4, 5]

    def test_transposed_swaps_non_adjacent(self):
        assert Ranking((1, 2, 3)).transposed(3, 1) == Ranking((3, 2, 1))

    def test_lexicographic_order(self):
        assert Ranking((1, 3, 2)) < Ranking((2, 1, 3))
        assert list(all_rankings(3))[0] == Ranking.identity(3)
        assert len(list(all_rankings(4))) == 24


class TestVotingInstance:
    def test_mismatched_voter(self):
        with pytest.raises(InvalidInputError, match="voter 2"):
            VotingInstance(3, (Ranking((1, 2, 3)), Ranking((1, 2))))

    def test_needs_a_voter(self):
        with pytest.raises(InvalidInputError):
            VotingInstance(3, ())

    def test_subinstance_uses_voter_numbers(self, fig1):
        sub = fig1.subinstance([4, 6])
        assert sub.voters == (fig1.voter(4), fig1.voter(6))

    def test_pairwise_support_sums_to_n(self, fig1):
        support = fig1.pairwise_support
        for a, b in combinations(range(1, 10), 2):
            assert support[a][b] + support[b][a] == fig1.n


class TestKendallDistance:
    def test_identity(self):
        assert kendall_distance(Ranking((1, 2, 3)), Ranking((1, 2, 3))) == 0

    @pytest.mark.parametrize("m", [1, 2, 5, 9])
    def test_full_reversal(self, m):
        r = Ranking.identity(m)
        assert kendall_distance(r, r.reversed()) == m * (m - 1) // 2

    @pytest.mark.parametrize("a, b", [
        ((2, 3, 1), (1, 2, 3)),
        # [8,9,7] against [9,7,8], relabelled onto 1..3
        ((2, 3, 1), (3, 1, 2)),
    ])
    def test_three_candidate_blocks(self, a, b):
        assert kendall_distance(Ranking(a), Ranking(b)) == 2

    def test_first_voter_of_six_voter_instance(self, fig1, sigma1, sigma2):
        assert kendall_distance(fig1.voter(1), sigma2) == 4
        assert kendall_distance(fig1.voter(1), sigma1) == 4

    def test_mismatched_sizes(self):
        with pytest.raises(InvalidInputError):
            kendall_distance(Ranking((1, 2)), Ranking((1, 2, 3)))

    def test_count_inversions(self):
        assert count_inversions([]) == 0
        assert count_inversions([3, 1, 2]) == 2
        assert count_inversions([5, 4, 3, 2, 1]) == 10

    @settings(max_examples=200)
    @given(ranking_pairs())
    def test_matches_pair_scan(self, pair):
        a, b = pair
        assert kendall_distance(a, b) == brute_force_distance(a, b)

    @settings(max_examples=100)
    @given(ranking_pairs())
    def test_matches_scipy_kendalltau(self, pair):
        a, b = pair
        if a.m < 2:
            return
        candidates = range(1, a.m + 1)
        tau, _ = kendalltau([a.rank(c) for c in candidates], [b.rank(c) for c in candidates])
        pairs = a.m * (a.m - 1) // 2
        # tau = (concordant - discordant) / pairs
        assert round((1 - tau) * pairs / 2) == kendall_distance(a, b)

    @settings(max_examples=200)
    @given(ranking_triples())
    def test_metric_axioms(self, triple):
        a, b, c = triple
        assert kendall_distance(a, b) == kendall_distance(b, a)
        assert (kendall_distance(a, b) == 0) == (a == b)
        assert kendall_distance(a, c) <= kendall_distance(a, b) + kendall_distance(b, c)
        assert kendall_distance(a, b) <= a.m * (a.m - 1) // 2


class TestPrefers:
    def test_first_voter(self, fig1):
        assert prefers(fig1.voter(1), 1, 2)
        assert not prefers(fig1.voter(1), 4, 6)

    def test_top_candidate(self):
        voter = Ranking((3, 1, 2))
        assert all(prefers(voter, 3, other) for other in (1, 2))

    def test_same_candidate(self):
        with pytest.raises(InvalidInputError):
            prefers(Ranking((1, 2)), 2, 2)


class TestDisagreementSet:
    def test_self(self):
        assert len(disagreement_set(Ranking((1, 2, 3)), Ranking((1, 2, 3)))) == 0

    def test_single_transposition(self):
        d = disagreement_set(Ranking((1, 2, 3)), Ranking((2, 1, 3)))
        assert list(d) == [(1, 2)]
        assert (2, 1) in d

    def test_six_voter_witness(self, sigma1, sigma2):
        d = disagreement_set(sigma1, sigma2)
        assert list(d) == [(4, 5), (4, 6), (7, 9), (8, 9)]

    @settings(max_examples=100)
    @given(ranking_pairs())
    def test_size_is_distance(self, pair):
        a, b = pair
        assert len(disagreement_set(a, b)) == kendall_distance(a, b)


class TestSwaps:
    def test_single_swap_path(self):
        path = bubble_swap_path(Ranking((2, 1, 3)), Ranking((1, 2, 3)))
        assert path == [Swap(1, (2, 1))]
        assert path[0].after == (1, 2)
        assert path[0].moving_up == 1

    def test_empty_path(self):
        assert bubble_swap_path(Ranking((3, 1, 2)), Ranking((3, 1, 2))) == []

    def test_reversal_path(self):
        assert len(bubble_swap_path(Ranking((3, 2, 1)), Ranking((1, 2, 3)))) == 3

    def test_good_swap(self):
        voter = Ranking((1, 2, 3))
        assert is_good_swap(Swap(1, (2, 1)), voter)
        assert not is_good_swap(Swap(1, (1, 2)), voter)

    def test_apply_swap(self):
        r = Ranking((2, 1, 3))
        once = apply_swap(r, Swap(1, (2, 1)))
        assert once == Ranking((1, 2, 3))
        assert apply_swap(once, Swap(1, (1, 2))) == r

    def test_stale_swap(self):
        with pytest.raises(InvalidInputError, match="stale"):
            apply_swap(Ranking((1, 2, 3)), Swap(1, (2, 1)))

    def test_swap_position_out_of_range(self):
        with pytest.raises(InvalidInputError):
            apply_swap(Ranking((1, 2)), Swap(2, (2, 1)))

    def test_good_swaps(self):
        r = Ranking((3, 2, 1))
        voter = Ranking((1, 2, 3))
        assert good_swaps(r, voter) == adjacent_swaps(r)
        assert leftmost_good_swap(r, voter) == Swap(1, (3, 2))
        assert leftmost_good_swap(voter, voter) is None

    @settings(max_examples=100)
    @given(ranking_triples(max_m=7))
    def test_path_steps_move_every_voter_by_one(self, triple):
        source, target, voter = triple
        path = bubble_swap_path(source, target)
        assert len(path) == kendall_distance(source, target)

        current = source
        distance = kendall_distance(current, voter)
        for swap in path:
            current = apply_swap(current, swap)
            step = kendall_distance(current, voter)
            assert step == distance + (-1 if is_good_swap(swap, voter) else 1)
            distance = step
        assert current == target

    @settings(max_examples=100)
    @given(ranking_pairs(max_m=7))
    def test_a_good_swap_exists_at_positive_distance(self, pair):
        ranking, voter = pair
        assert (leftmost_good_swap(ranking, voter) is None) == (ranking == voter)

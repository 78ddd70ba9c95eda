from itertools import combinations
from typing import Optional

from src.core import InvalidInputError, PreconditionError, Ranking, VotingInstance
from src.majority import build_majority_graph, is_acyclic, is_topologically_sorted, is_tournament, topological_sorts


def verify_popular_small(inst: VotingInstance, ranking: Ranking) -> bool:
    """
    Popularity for at most three voters, where it coincides with being
    topologically sorted (in both the absolute and the simple sense).
    """
    if inst.n > 3:
        raise InvalidInputError(f"the topological-sort test only decides popularity for n <= 3, got n = {inst.n}")
    return is_topologically_sorted(inst, ranking)


def verify_popular_4_tournament(inst: VotingInstance, ranking: Ranking) -> bool:
    """With four voters and an acyclic tournament, only the unique topological sort is popular."""
    if inst.n != 4:
        raise InvalidInputError(f"expected 4 voters, got {inst.n}")
    graph = build_majority_graph(inst)
    if not (is_tournament(graph) and is_acyclic(graph)):
        raise PreconditionError("the majority graph is not an acyclic tournament")

    ranking = inst.check_ranking(ranking)
    return ranking == next(topological_sorts(inst, limit=1))


def popular_by_subinstance(inst: VotingInstance, ranking: Ranking) -> Optional[bool]:
    """
    One-sided popularity certificate for four voters.

    Returns True when ``ranking`` is popular among some three of the voters,
    which makes it popular for all four. None means no triple certifies it;
    that is not a refutation.
    """
    if inst.n != 4:
        raise InvalidInputError(f"expected 4 voters, got {inst.n}")
    if not is_acyclic(build_majority_graph(inst)):
        raise PreconditionError("the majority graph of the four voters is cyclic")

    ranking = inst.check_ranking(ranking)
    for trio in combinations(range(1, 5), 3):
        if verify_popular_small(inst.subinstance(trio), ranking):
            return True
    return None

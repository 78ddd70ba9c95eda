from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from src.config import log_config, search_config
from src.core import InvariantViolation, Ranking, SearchBudgetExceeded, VotingInstance, kendall_distance
from src.utils import setup_logger

logger = setup_logger(log_config.log_path("kemeny.log"), log_config.level)


@dataclass(frozen=True)
class KemenyResult:
    """
    Exact Kemeny optimum with its minimizers in lexicographic order. When more
    than ``cap`` minimizers exist only the first ``cap`` are kept and
    ``truncated`` is set.
    """
    optimum: int
    minimizers: Tuple[Ranking, ...]
    truncated: bool = False
    nodes: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "optimum": self.optimum,
            "minimizers": [ranking.to_list() for ranking in self.minimizers],
            "truncated": self.truncated,
            "nodes": self.nodes,
        }


def kemeny_rank(inst: VotingInstance, ranking: Ranking) -> int:
    ranking = inst.check_ranking(ranking)
    return sum(kendall_distance(ranking, voter) for voter in inst.voters)


class _BranchAndBound:
    """
    Depth-first search over ranking prefixes, extending by the smallest
    candidate first.

    Placing candidate c before every still-unplaced r costs support[r][c]
    (voters preferring r to c). The bound adds, for every pair of unplaced
    candidates, the cheaper of its two orders.
    """

    def __init__(self, inst: VotingInstance, budget: int, cap: int):
        self.m = inst.m
        self.support = inst.pairwise_support
        self.budget = budget
        self.cap = cap

        self.best = min(kemeny_rank(inst, voter) for voter in inst.voters)
        self.minimizers: List[Ranking] = []
        self.truncated = False
        self.nodes = 0

    def pair_floor(self, a: int, b: int) -> int:
        return min(self.support[a][b], self.support[b][a])

    def solve(self) -> KemenyResult:
        remaining = list(range(1, self.m + 1))
        floor = sum(self.pair_floor(a, b) for i, a in enumerate(remaining) for b in remaining[i + 1:])
        self._extend([], remaining, 0, floor)
        return KemenyResult(self.best, tuple(self.minimizers), self.truncated, self.nodes)

    def _extend(self, prefix: List[int], remaining: List[int], fixed: int, floor: int):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(self.nodes, self.budget, "branch-and-bound nodes")

        if not remaining:
            if fixed < self.best:
                self.best = fixed
                self.minimizers = []
                self.truncated = False
            if fixed == self.best:
                if len(self.minimizers) < self.cap:
                    self.minimizers.append(Ranking(tuple(prefix)))
                else:
                    self.truncated = True
            return

        for candidate in remaining:
            rest = [r for r in remaining if r != candidate]
            cost = fixed + sum(self.support[r][candidate] for r in rest)
            rest_floor = floor - sum(self.pair_floor(candidate, r) for r in rest)
            if cost + rest_floor > self.best:
                continue
            prefix.append(candidate)
            self._extend(prefix, rest, cost, rest_floor)
            prefix.pop()


def kemeny_consensus(
        inst: VotingInstance,
        budget: Optional[int] = None,
        cap: Optional[int] = None,
) -> KemenyResult:
    """
    Exact Kemeny consensus by branch-and-bound.

    Args:
        inst (VotingInstance): Voting instance.
        budget (Optional[int]): Maximum number of search nodes.
        cap (Optional[int]): Maximum number of minimizers to list.

    Returns:
        KemenyResult: Optimum and lexicographically ordered minimizers.

    Raises:
        SearchBudgetExceeded: If the search visits more nodes than the budget.
    """
    budget = search_config.resolve_budget(budget)
    cap = search_config.minimizer_cap if cap is None else cap

    try:
        result = _BranchAndBound(inst, budget, cap).solve()
    except SearchBudgetExceeded:
        logger.error(f"Kemeny search on {inst.n} voters, {inst.m} candidates exceeded {budget} nodes",
                     exc_info=True)
        raise

    logger.info(f"SUMMARY: optimum {result.optimum}, {len(result.minimizers)} minimizers"
                f"{' (truncated)' if result.truncated else ''}, {result.nodes} nodes")
    return result


def smaller_kemeny_rank(
        inst: VotingInstance,
        pi: Ranking,
        budget: Optional[int] = None,
) -> Optional[Ranking]:
    """A ranking with strictly smaller Kemeny rank than ``pi``, or None when ``pi`` is optimal."""
    current = kemeny_rank(inst, pi)
    result = kemeny_consensus(inst, budget, cap=1)
    if result.optimum < current:
        return result.minimizers[0]
    return None


def improvement_chain(
        inst: VotingInstance,
        start: Ranking,
        budget: Optional[int] = None,
) -> List[Ranking]:
    """
    Rankings visited by repeatedly asking for a smaller Kemeny rank, ending at
    a consensus. Each step lowers the rank, so the chain has at most
    n*m(m-1)/2 + 1 entries.
    """
    start = inst.check_ranking(start, "start")
    bound = inst.n * inst.m * (inst.m - 1) // 2
    chain = [start]

    while True:
        better = smaller_kemeny_rank(inst, chain[-1], budget)
        if better is None:
            break
        chain.append(better)
        if len(chain) - 1 > bound:
            raise InvariantViolation(f"more than {bound} Kemeny improvements from {start}")

    logger.info(f"Improvement chain of {len(chain) - 1} steps from {start} to {chain[-1]}")
    return chain


def consensus_by_improvement(
        inst: VotingInstance,
        start: Ranking,
        budget: Optional[int] = None,
) -> Ranking:
    return improvement_chain(inst, start, budget)[-1]

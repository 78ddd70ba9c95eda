from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from src.config import log_config
from src.core import (InvalidInputError, InvariantViolation, PreconditionError, Ranking, VotingInstance,
                      apply_swap, kendall_distance, leftmost_good_swap)
from src.majority import build_majority_graph, is_acyclic, topological_sorts
from src.utils import setup_logger

logger = setup_logger(log_config.log_path("search.log"), log_config.level)


class AcrCase(str, Enum):
    ALL_PREFER = "all-prefer-topsort"
    TWO_PREFER = "two-prefer-swap-procedure"
    ONE_PREFERS = "one-prefers-no-solution"
    NONE_PREFER = "none-prefer-kemeny-argument"
    NO_SOLUTION = "no-solution"


@dataclass(frozen=True)
class AcrOutcome:
    """
    Result of the three-voter all-closer search.

    ``distances`` is (d1, d2, d3) whenever exactly two voters prefer the
    topological sort: d1 <= d2 are the gains of those two voters and d3 is the
    loss of the third voter, whose number is ``dissenter``.
    """
    result: Optional[Ranking]
    case_taken: AcrCase
    distances: Optional[Tuple[int, int, int]] = None
    dissenter: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case": self.case_taken.value,
            "distances": list(self.distances) if self.distances else None,
            "dissenter": self.dissenter,
            "result": self.result.to_list() if self.result else None,
        }


def _all_prefer(inst: VotingInstance, candidate: Ranking, pi: Ranking) -> bool:
    return all(kendall_distance(candidate, voter) < kendall_distance(pi, voter) for voter in inst.voters)


def three_all_closer_ranking(inst: VotingInstance, pi: Ranking) -> AcrOutcome:
    """
    Decide whether some ranking is preferred to ``pi`` by all three voters.

    With three voters an acyclic majority graph is an acyclic tournament and
    has a unique topological sort sigma. The answer follows from how many
    voters prefer sigma to ``pi``:

    - all three: sigma itself;
    - two: starting from sigma, make d3 + 1 swaps that are good for the third
      voter (leftmost first) and verify the result;
    - one: the other two voters agree with ``pi`` on complementary halves of
      the pairs where ``pi`` and sigma differ, so ``pi`` is topologically sorted
      for them and nothing beats it for both;
    - none: ``pi`` already has minimum Kemeny rank.

    Args:
        inst (VotingInstance): Instance with exactly three voters.
        pi (Ranking): Incumbent ranking.

    Returns:
        AcrOutcome: The ranking found (or None) and the case that decided it.

    Raises:
        InvalidInputError: If the instance does not have three voters.
        PreconditionError: If the majority graph is cyclic.
    """
    if inst.n != 3:
        raise InvalidInputError(f"expected 3 voters, got {inst.n}")
    if not is_acyclic(build_majority_graph(inst)):
        raise PreconditionError("the majority graph of the three voters is cyclic")

    pi = inst.check_ranking(pi, "pi")
    sigma = next(topological_sorts(inst, limit=1))

    before = [kendall_distance(pi, voter) for voter in inst.voters]
    after = [kendall_distance(sigma, voter) for voter in inst.voters]
    supporters = [i for i in range(3) if after[i] < before[i]]

    if len(supporters) == 3:
        return AcrOutcome(sigma, AcrCase.ALL_PREFER)
    if len(supporters) == 1:
        return AcrOutcome(None, AcrCase.ONE_PREFERS)
    if not supporters:
        return AcrOutcome(None, AcrCase.NONE_PREFER)

    third = next(i for i in range(3) if i not in supporters)
    gains = sorted(before[i] - after[i] for i in supporters)
    distances = (gains[0], gains[1], after[third] - before[third])
    dissenter = inst.voters[third]

    current = sigma
    for _ in range(distances[2] + 1):
        swap = leftmost_good_swap(current, dissenter)
        if swap is None:
            logger.info(f"No good swap left for voter {third + 1}: pi equals that voter's ranking")
            return AcrOutcome(None, AcrCase.NO_SOLUTION, distances, third + 1)
        current = apply_swap(current, swap)

    if _all_prefer(inst, current, pi):
        return AcrOutcome(current, AcrCase.TWO_PREFER, distances, third + 1)

    if distances[0] - distances[2] >= 2:
        raise InvariantViolation(f"swap procedure from {sigma} produced {current}, which not every voter prefers")
    return AcrOutcome(None, AcrCase.NO_SOLUTION, distances, third + 1)

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List

from src.core import Ranking, VotingInstance, kendall_distance


class Mode(str, Enum):
    ABSOLUTE = "absolute"
    SIMPLE = "simple"


@dataclass(frozen=True)
class ComparisonTally:
    """
    How the voters split between two rankings. Voter numbers are 1-based and
    the three sets partition 1..n.
    """
    prefer_left: FrozenSet[int]
    prefer_right: FrozenSet[int]
    abstain: FrozenSet[int]

    @property
    def n(self) -> int:
        return len(self.prefer_left) + len(self.prefer_right) + len(self.abstain)

    def to_dict(self) -> Dict[str, List[int]]:
        return {
            "prefer_left": sorted(self.prefer_left),
            "prefer_right": sorted(self.prefer_right),
            "abstain": sorted(self.abstain),
        }


def compare(inst: VotingInstance, left: Ranking, right: Ranking) -> ComparisonTally:
    left = inst.check_ranking(left, "left ranking")
    right = inst.check_ranking(right, "right ranking")

    prefer_left, prefer_right, abstain = set(), set(), set()
    for number, voter in enumerate(inst.voters, start=1):
        delta = kendall_distance(right, voter) - kendall_distance(left, voter)
        if delta > 0:
            prefer_left.add(number)
        elif delta < 0:
            prefer_right.add(number)
        else:
            abstain.add(number)

    return ComparisonTally(frozenset(prefer_left), frozenset(prefer_right), frozenset(abstain))


def wins(prefer_challenger: int, prefer_incumbent: int, n: int, mode: Mode) -> bool:
    """
    Whether a challenger with these counts beats the incumbent.

    Simple mode needs at least one challenger supporter; a comparison where
    everybody abstains is never a win.
    """
    if Mode(mode) is Mode.ABSOLUTE:
        return 2 * prefer_challenger > n
    return prefer_challenger > prefer_incumbent and prefer_challenger > 0


def is_more_popular(inst: VotingInstance, challenger: Ranking, incumbent: Ranking, mode: Mode) -> bool:
    tally = compare(inst, challenger, incumbent)
    return wins(len(tally.prefer_left), len(tally.prefer_right), inst.n, mode)

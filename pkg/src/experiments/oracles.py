from typing import List, Optional, Sequence

import numpy as np

from src.core import Ranking, VotingInstance, all_rankings, kendall_distance
from src.popularity import Mode


def distance_table(inst: VotingInstance, rankings: Optional[Sequence[Ranking]] = None) -> np.ndarray:
    """
    Kendall distances from every ranking to every voter.

    :param inst: voting instance
    :param rankings: rows of the table (all m! rankings, lexicographically, when None)
    :return: integer array of shape (len(rankings), n)
    """
    rankings = list(all_rankings(inst.m)) if rankings is None else list(rankings)
    return np.array([[kendall_distance(r, voter) for voter in inst.voters] for r in rankings], dtype=np.int64)


def popular_mask(table: np.ndarray, mode: Mode) -> np.ndarray:
    """
    Which rows of a full distance table are popular against every other row.
    """
    n = table.shape[1]
    # closer[c, i]: voters strictly closer to ranking c than to ranking i
    closer = (table[:, None, :] < table[None, :, :]).sum(axis=2)

    if Mode(mode) is Mode.ABSOLUTE:
        beaten = (2 * closer > n).any(axis=0)
    else:
        beaten = ((closer > closer.T) & (closer > 0)).any(axis=0)
    return ~beaten


def popular_set(inst: VotingInstance, mode: Mode) -> List[Ranking]:
    """All popular rankings by full enumeration (m <= 7)."""
    rankings = list(all_rankings(inst.m))
    mask = popular_mask(distance_table(inst, rankings), mode)
    return [ranking for ranking, keep in zip(rankings, mask) if keep]


def all_closer_exists(inst: VotingInstance, pi: Ranking) -> bool:
    """Whether some ranking is strictly closer than ``pi`` to every voter (full enumeration)."""
    table = distance_table(inst)
    baseline = np.array([kendall_distance(pi, voter) for voter in inst.voters])
    return bool((table < baseline).all(axis=1).any())

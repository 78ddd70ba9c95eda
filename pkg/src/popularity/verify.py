from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional

from src.config import log_config, search_config
from src.core import InvalidInputError, Ranking, SearchBudgetExceeded, VotingInstance
from src.majority import OrderedPartition, topological_sorts
from src.popularity.comparison import ComparisonTally, Mode, compare, wins
from src.popularity.search import ChallengerSearch
from src.utils import setup_logger

logger = setup_logger(log_config.log_path("search.log"), log_config.level)


class Status(str, Enum):
    POPULAR = "popular"
    NOT_POPULAR = "not-popular"


@dataclass(frozen=True)
class PopularityVerdict:
    """
    Outcome of a popularity check. ``witness`` and ``certificate`` are set
    exactly when the ranking is not popular; ``certificate`` is the tally of
    the witness (left) against the checked ranking (right).
    """
    status: Status
    mode: Mode
    witness: Optional[Ranking] = None
    certificate: Optional[ComparisonTally] = None
    searched: int = 0

    @property
    def is_popular(self) -> bool:
        return self.status is Status.POPULAR

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "mode": self.mode.value,
            "witness": self.witness.to_list() if self.witness else None,
            "tally": self.certificate.to_dict() if self.certificate else None,
            "searched": self.searched,
        }


class Threshold(str, Enum):
    EXACTLY_ONE = "exactly-one"
    AT_LEAST_ONE = "at-least-one"
    EXACTLY_TWO = "exactly-two"
    AT_LEAST_TWO = "at-least-two"
    ALL_THREE = "all-three"

    def accepts(self, count: int) -> bool:
        return {
            Threshold.EXACTLY_ONE: count == 1,
            Threshold.AT_LEAST_ONE: count >= 1,
            Threshold.EXACTLY_TWO: count == 2,
            Threshold.AT_LEAST_TWO: count >= 2,
            Threshold.ALL_THREE: count == 3,
        }[self]

    @property
    def is_monotone(self) -> bool:
        return self in (Threshold.AT_LEAST_ONE, Threshold.AT_LEAST_TWO, Threshold.ALL_THREE)


def _partition_for(inst: VotingInstance, pruned: bool) -> Optional[OrderedPartition]:
    return None if pruned else OrderedPartition.trivial(inst.m)


def verify_popular(
        inst: VotingInstance,
        ranking: Ranking,
        mode: Mode = Mode.ABSOLUTE,
        budget: Optional[int] = None,
        threads: Optional[int] = None,
        pruned: bool = True,
        progress: bool = False,
) -> PopularityVerdict:
    """
    Decide whether ``ranking`` is popular by exhaustive challenger search.

    Only challengers preserving the finest preserved partition are tried: any
    ranking beating ``ranking`` can be reordered block by block without losing
    a supporter.

    Args:
        inst (VotingInstance): Voting instance.
        ranking (Ranking): Ranking to verify.
        mode (Mode): Absolute or simple majority.
        budget (Optional[int]): Maximum number of challengers.
        threads (Optional[int]): Worker threads for the search.
        pruned (bool): Restrict to block-preserving challengers (False searches all m!).
        progress (bool): Show a progress bar.

    Returns:
        PopularityVerdict: popular, or the lexicographically smallest witness with its tally.

    Raises:
        SearchBudgetExceeded: If the challenger space is larger than the budget.
    """
    mode = Mode(mode)
    ranking = inst.check_ranking(ranking)
    search = ChallengerSearch(inst, ranking, _partition_for(inst, pruned), budget, threads, progress)
    outcome = search.run(lambda challenger, incumbent: wins(challenger, incumbent, inst.n, mode))

    if outcome.witness is None:
        return PopularityVerdict(Status.POPULAR, mode, searched=outcome.searched)

    certificate = compare(inst, outcome.witness, ranking)
    return PopularityVerdict(Status.NOT_POPULAR, mode, outcome.witness, certificate, outcome.searched)


def _capped_topsorts(inst: VotingInstance, limit: Optional[int]) -> Iterator[Ranking]:
    """Topological sorts up to ``limit``; reaching past it raises instead of truncating."""
    limit = search_config.topsort_limit if limit is None else limit
    for count, candidate in enumerate(topological_sorts(inst, limit + 1), start=1):
        if count > limit:
            raise SearchBudgetExceeded(count, limit, "topological sorts")
        yield candidate


def popular_rankings(
        inst: VotingInstance,
        mode: Mode = Mode.ABSOLUTE,
        budget: Optional[int] = None,
        limit: Optional[int] = None,
        threads: Optional[int] = None,
) -> List[Ranking]:
    """All popular rankings, lexicographically. Only topological sorts can be popular."""
    found = []
    for candidate in _capped_topsorts(inst, limit):
        if verify_popular(inst, candidate, mode, budget, threads).is_popular:
            found.append(candidate)
    logger.info(f"SUMMARY: {len(found)} {Mode(mode).value}ly popular rankings")
    return found


def find_popular(
        inst: VotingInstance,
        mode: Mode = Mode.ABSOLUTE,
        budget: Optional[int] = None,
        limit: Optional[int] = None,
        threads: Optional[int] = None,
) -> Optional[Ranking]:
    for candidate in _capped_topsorts(inst, limit):
        if verify_popular(inst, candidate, mode, budget, threads).is_popular:
            return candidate
    return None


def find_all_closer(
        inst: VotingInstance,
        ranking: Ranking,
        budget: Optional[int] = None,
        threads: Optional[int] = None,
        pruned: bool = True,
) -> Optional[Ranking]:
    """Smallest ranking that every voter strictly prefers to ``ranking``, if any."""
    search = ChallengerSearch(inst, ranking, _partition_for(inst, pruned), budget, threads)
    return search.run(lambda challenger, incumbent: challenger == inst.n).witness


def constrained_improvement_search(
        inst: VotingInstance,
        ranking: Ranking,
        threshold: Threshold,
        budget: Optional[int] = None,
        threads: Optional[int] = None,
) -> Optional[Ranking]:
    """
    Smallest ranking that no voter likes less than ``ranking`` and that the
    number of strictly happier voters meets ``threshold``.

    Exact thresholds search all m! rankings: reordering a challenger block by
    block can turn an abstainer into a supporter.
    """
    if inst.n != 3:
        raise InvalidInputError(f"constrained improvement search needs exactly 3 voters, got {inst.n}")

    threshold = Threshold(threshold)
    search = ChallengerSearch(inst, ranking, _partition_for(inst, threshold.is_monotone), budget, threads)
    return search.run(
        lambda challenger, incumbent: incumbent == 0 and threshold.accepts(challenger)
    ).witness

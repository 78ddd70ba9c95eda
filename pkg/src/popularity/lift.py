from typing import Optional

from src.config import log_config
from src.core import InvariantViolation, PreconditionError, Ranking, Swap, VotingInstance, apply_swap, prefers
from src.majority import build_majority_graph, is_acyclic, is_topologically_sorted, topological_sorts
from src.popularity.comparison import Mode, compare, is_more_popular, wins
from src.popularity.verify import verify_popular
from src.utils import setup_logger

logger = setup_logger(log_config.log_path("search.log"), log_config.level)


def _swap_favoured_by_abstainers(inst: VotingInstance, sigma1: Ranking, abstainers) -> Optional[Swap]:
    """First consecutive pair (a, b) of sigma1 with at least half of the abstainers preferring b to a."""
    voters = [inst.voter(number) for number in sorted(abstainers)]
    for p in range(1, inst.m):
        a, b = sigma1.order[p - 1], sigma1.order[p]
        backers = sum(1 for voter in voters if prefers(voter, b, a))
        if 2 * backers >= len(voters):
            return Swap(p, (a, b))
    return None


def lift_simple_witness_to_absolute(
        inst: VotingInstance,
        pi: Ranking,
        sigma1: Ranking,
        budget: Optional[int] = None,
) -> Ranking:
    """
    Turn a ranking beating ``pi`` by simple majority into one beating it by
    absolute majority.

    Args:
        inst (VotingInstance): Voting instance.
        pi (Ranking): Incumbent ranking.
        sigma1 (Ranking): Ranking more popular than ``pi`` in the simple sense.
        budget (Optional[int]): Budget for the brute-force fallback.

    Returns:
        Ranking: A ranking more popular than ``pi`` in the absolute sense.

    Raises:
        PreconditionError: If ``sigma1`` is not a simple witness, or the voters
            abstaining between ``sigma1`` and ``pi`` have a cyclic majority graph.
        InvariantViolation: If the constructed ranking fails verification.
    """
    pi = inst.check_ranking(pi, "pi")
    sigma1 = inst.check_ranking(sigma1, "sigma1")

    tally = compare(inst, sigma1, pi)
    if not wins(len(tally.prefer_left), len(tally.prefer_right), inst.n, Mode.SIMPLE):
        raise PreconditionError(f"{sigma1} is not more popular than {pi} in the simple sense")

    if tally.abstain:
        abstainer_graph = build_majority_graph(inst.subinstance(sorted(tally.abstain)))
        cycle = abstainer_graph.find_cycle()
        if cycle is not None:
            raise PreconditionError(
                f"voters {sorted(tally.abstain)} abstaining between sigma1 and pi have a cyclic "
                f"majority graph (cycle {' -> '.join(map(str, cycle + cycle[:1]))})"
            )

    if not is_topologically_sorted(inst, pi):
        if is_acyclic(build_majority_graph(inst)):
            candidate = next(topological_sorts(inst, limit=1))
            if is_more_popular(inst, candidate, pi, Mode.ABSOLUTE):
                logger.info(f"pi is not topologically sorted; returning topological sort {candidate}")
                return candidate
        else:
            verdict = verify_popular(inst, pi, Mode.ABSOLUTE, budget)
            if verdict.witness is not None:
                logger.info(f"Cyclic majority graph; brute-force witness {verdict.witness}")
                return verdict.witness

    if not tally.abstain:
        return sigma1

    swap = _swap_favoured_by_abstainers(inst, sigma1, tally.abstain)
    if swap is None:
        raise InvariantViolation(f"no consecutive pair of {sigma1} is backed by half of the abstainers")

    sigma2 = apply_swap(sigma1, swap)
    if not is_more_popular(inst, sigma2, pi, Mode.ABSOLUTE):
        raise InvariantViolation(f"lifted ranking {sigma2} does not beat {pi} by absolute majority")

    logger.info(f"Lifted {sigma1} to {sigma2} by swapping {swap.pair} at position {swap.position}")
    return sigma2

from concurrent.futures import ThreadPoolExecutor, as_completed
from itertools import combinations
from typing import List, Optional, Tuple

from src.config import log_config, search_config
from src.core import InvalidInputError, InvariantViolation, PreconditionError, Ranking, VotingInstance, \
    kendall_distance
from src.majority import build_majority_graph, is_acyclic
from src.popularity import compare, find_all_closer
from src.small_n.all_closer import three_all_closer_ranking
from src.utils import setup_logger

logger = setup_logger(log_config.log_path("search.log"), log_config.level)


def pad_with_incumbent(inst: VotingInstance, pi: Ranking, copies: int) -> VotingInstance:
    """
    Append ``copies`` voters who rank exactly like ``pi``. Three voters plus one
    copy (or two copies) give an instance where a ranking beats ``pi`` by
    absolute majority iff all three original voters prefer it.
    """
    if copies < 0:
        raise InvalidInputError(f"copies must be nonnegative, got {copies}")
    pi = inst.check_ranking(pi, "pi")
    return inst.with_voters([pi] * copies)


def _trio_witness(inst: VotingInstance, trio: Tuple[int, ...], pi: Ranking,
                  budget: Optional[int]) -> Optional[Ranking]:
    sub = inst.subinstance(trio)
    if is_acyclic(build_majority_graph(sub)):
        return three_all_closer_ranking(sub, pi).result
    logger.info(f"Voters {trio} have a cyclic majority graph; falling back to brute force")
    return find_all_closer(sub, pi, budget, threads=1)


def aurv_via_acr(
        inst: VotingInstance,
        pi: Ranking,
        budget: Optional[int] = None,
        threads: Optional[int] = None,
) -> Optional[Ranking]:
    """
    Absolute-majority witness against ``pi`` for four or five voters.

    Three voters are a strict majority of four or five, so a witness exists iff
    some voter triple has a ranking all three prefer to ``pi``.

    Args:
        inst (VotingInstance): Instance with 4 or 5 voters.
        pi (Ranking): Incumbent ranking.
        budget (Optional[int]): Budget for triples needing brute force.
        threads (Optional[int]): Triples processed concurrently.

    Returns:
        Optional[Ranking]: The lexicographically smallest witness found over all triples, or None.
    """
    if inst.n not in (4, 5):
        raise InvalidInputError(f"expected 4 or 5 voters, got {inst.n}")
    pi = inst.check_ranking(pi, "pi")

    trios = list(combinations(range(1, inst.n + 1), 3))
    witnesses: List[Ranking] = []

    with ThreadPoolExecutor(max_workers=search_config.resolve_threads(threads)) as executor:
        future_to_trio = {executor.submit(_trio_witness, inst, trio, pi, budget): trio for trio in trios}
        for future in as_completed(future_to_trio):
            witness = future.result()
            if witness is not None:
                logger.info(f"Voters {future_to_trio[future]} all prefer {witness} to {pi}")
                witnesses.append(witness)

    return min(witnesses) if witnesses else None


def copy_ranking(ranking: Ranking, copy: int, m: int) -> Tuple[int, ...]:
    """Labels of ``ranking`` in candidate copy ``copy`` (1..3): r becomes r + (copy - 1) * m."""
    return tuple(candidate + (copy - 1) * m for candidate in ranking.order)


def triple_copy(ranking: Ranking) -> Ranking:
    """The ranking repeated on the three candidate copies, copy 1 first."""
    m = ranking.m
    return Ranking(copy_ranking(ranking, 1, m) + copy_ranking(ranking, 2, m) + copy_ranking(ranking, 3, m))


def kemeny_to_acr_instance(inst: VotingInstance, pi: Ranking) -> Tuple[VotingInstance, Ranking]:
    """
    Three-voter instance on 3m candidates in which some ranking is preferred to
    the transformed ``pi`` by all voters iff some ranking has smaller Kemeny
    rank than ``pi`` in ``inst``.

    Voter k of the result ranks the copies of the original voters k, k+1, k+2
    (cyclically) on copies 1, 2, 3. The transformed incumbent is ``pi`` on every
    copy, so its distance to each voter equals the Kemeny rank of ``pi``.
    """
    if inst.n != 3:
        raise InvalidInputError(f"expected 3 voters, got {inst.n}")
    pi = inst.check_ranking(pi, "pi")

    m = inst.m
    voters = []
    for k in range(3):
        order = ()
        for copy in range(1, 4):
            order += copy_ranking(inst.voters[(k + copy - 1) % 3], copy, m)
        voters.append(Ranking(order))

    return VotingInstance(3 * m, tuple(voters)), triple_copy(pi)


def split_copies(ranking: Ranking, m: int) -> List[Ranking]:
    """Order of each candidate copy within ``ranking``, mapped back to 1..m."""
    parts = []
    for copy in range(1, 4):
        offset = (copy - 1) * m
        parts.append(Ranking(tuple(c - offset for c in ranking.order if offset < c <= offset + m)))
    return parts


def extract_smaller_kemeny(inst: VotingInstance, pi: Ranking, sigma_prime: Ranking) -> Ranking:
    """
    Recover a ranking with smaller Kemeny rank than ``pi`` from a ranking all
    transformed voters prefer to the transformed ``pi``.

    Raises:
        PreconditionError: If not all three transformed voters prefer ``sigma_prime``.
        InvariantViolation: If no copy yields a smaller Kemeny rank.
    """
    transformed, pi_prime = kemeny_to_acr_instance(inst, pi)
    sigma_prime = transformed.check_ranking(sigma_prime, "sigma'")

    tally = compare(transformed, sigma_prime, pi_prime)
    if len(tally.prefer_left) != 3:
        raise PreconditionError(f"sigma' is preferred by voters {sorted(tally.prefer_left)} only, not by all three")

    first_voter = transformed.voters[0]
    target = kendall_distance(pi_prime, first_voter)
    for part in split_copies(sigma_prime, inst.m):
        if kendall_distance(triple_copy(part), first_voter) < target:
            logger.info(f"Extracted {part} from {sigma_prime}")
            return part

    raise InvariantViolation(f"no candidate copy of {sigma_prime} improves the Kemeny rank of {pi}")

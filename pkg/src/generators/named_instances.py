from typing import Tuple

from src.core import InvalidInputError, InvariantViolation, Ranking, VotingInstance


def _instance(*voters) -> VotingInstance:
    return VotingInstance.from_rankings(Ranking.from_blocks(*blocks) for blocks in voters)


def fig1_instance() -> VotingInstance:
    """Six voters over nine candidates; absolutely but not simply popular ranking exists."""
    return _instance(
        ([1, 2, 3], [6, 4, 5], [8, 9, 7]),
        ([2, 3, 1], [4, 5, 6], [9, 7, 8]),
        ([3, 1, 2], [5, 6, 4], [7, 8, 9]),
        ([1, 2, 3], [4, 5, 6], [7, 8, 9]),
        ([1, 2, 3], [5, 4, 6], [9, 7, 8]),
        ([1, 2, 3], [5, 6, 4], [7, 9, 8]),
    )


def example1_instance() -> VotingInstance:
    """Four voters, six candidates; a Kemeny consensus that is not absolutely popular."""
    return _instance(
        ([2, 1], [4, 3], [5, 6]),
        ([1, 2], [4, 3], [6, 5]),
        ([2, 1], [3, 4], [6, 5]),
        ([1, 2], [3, 4], [5, 6]),
    )


def obs4_instance() -> VotingInstance:
    """Four voters, ten candidates; topologically sorted voter ranking that is not popular."""
    return _instance(
        ([1, 2], [3, 4], [5, 6], [7, 8], [9, 10]),
        ([1, 2], [4, 3], [6, 5], [7, 8], [10, 9]),
        ([1, 2], [4, 3], [6, 5], [8, 7], [9, 10]),
        ([2, 1], [3, 4], [5, 6], [8, 7], [10, 9]),
    )


def appendix_b_instance() -> VotingInstance:
    """Eight voters, nine candidates; the last two voters' ranking is the only absolutely popular one."""
    return _instance(
        ([1, 2, 3], [6, 4, 5], [8, 9, 7]),
        ([2, 3, 1], [4, 5, 6], [9, 7, 8]),
        ([3, 1, 2], [5, 6, 4], [7, 8, 9]),
        ([1, 2, 3], [4, 5, 6], [8, 9, 7]),
        ([1, 2, 3], [5, 6, 4], [7, 8, 9]),
        ([2, 3, 1], [4, 5, 6], [7, 8, 9]),
        ([2, 3, 1], [5, 6, 4], [8, 9, 7]),
        ([2, 3, 1], [5, 6, 4], [8, 9, 7]),
    )


def _blocks(decreasing, block_count: int) -> Ranking:
    order = []
    for block in range(block_count):
        a, b = 2 * block + 1, 2 * block + 2
        order += [b, a] if block in decreasing else [a, b]
    return Ranking(tuple(order))


def tight_c_instance(j: int) -> Tuple[VotingInstance, Ranking, Ranking]:
    """
    Family showing that 3/4-sortedness cannot be relaxed.

    4j voters over 4j+2 candidates grouped in 2j+1 blocks (2i-1, 2i). 2j-1
    voters rank pi = all blocks increasing; shifted voter i (0..2j) reverses
    the blocks at positions i..i+j modulo 2j+1. sigma reverses every block.

    :param j: family parameter, at least 1
    :return: (instance, pi, sigma)
    """
    if j < 1:
        raise InvalidInputError(f"j must be at least 1, got {j}")

    block_count = 2 * j + 1
    pi = _blocks(set(), block_count)
    sigma = _blocks(set(range(block_count)), block_count)

    voters = [pi] * (2 * j - 1)
    for i in range(block_count):
        voters.append(_blocks({(i + k) % block_count for k in range(j + 1)}, block_count))

    return VotingInstance(4 * j + 2, tuple(voters)), pi, sigma


def extended_condorcet(n: int) -> VotingInstance:
    """n voters over n candidates; voter i ranks i, ..., n, 1, ..., i-1."""
    if n < 3:
        raise InvalidInputError(f"the extended Condorcet instance needs n >= 3, got {n}")
    return VotingInstance(n, tuple(
        Ranking(tuple(range(i, n + 1)) + tuple(range(1, i))) for i in range(1, n + 1)
    ))


def condorcet_beater(inst: VotingInstance, pi: Ranking) -> Ranking:
    """
    Ranking preferred to ``pi`` by all but one voter of ``extended_condorcet(n)``.

    Takes the first cyclic pair (a, a+1), ..., (n, 1) that ``pi`` orders
    against the cycle and transposes a and b.
    """
    pi = inst.check_ranking(pi, "pi")
    n = inst.m
    for a in range(1, n + 1):
        b = a % n + 1
        if pi.rank(b) < pi.rank(a):
            return pi.transposed(a, b)
    raise InvariantViolation(f"{pi} agrees with every pair of the Condorcet cycle")

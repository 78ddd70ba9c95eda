from typing import Iterator, Optional

import numpy as np

from src.core import InvalidInputError, Ranking, VotingInstance

# Pinned generator: numpy PCG64 through default_rng(seed); voter k is
# rng.permutation(m) + 1, drawn in voter order. Changing this changes every seed.
GENERATOR_NAME = "numpy.random.PCG64"


def random_instance(n: int, m: int, seed: int) -> VotingInstance:
    """
    n independent uniform rankings of m candidates.

    :param n: number of voters
    :param m: number of candidates
    :param seed: unsigned 64-bit seed; equal seeds give equal instances
    """
    if n < 1 or m < 1:
        raise InvalidInputError(f"need at least one voter and one candidate, got n={n}, m={m}")
    if not 0 <= seed < 2 ** 64:
        raise InvalidInputError(f"seed must be an unsigned 64-bit integer, got {seed}")

    rng = np.random.default_rng(seed)
    return VotingInstance(m, tuple(Ranking(tuple(int(c) for c in rng.permutation(m) + 1)) for _ in range(n)))


def random_ranking(m: int, rng: np.random.Generator) -> Ranking:
    return Ranking(tuple(int(c) for c in rng.permutation(m) + 1))


def random_instances(count: int, seed: int, n_range=(1, 6), m_range=(1, 5),
                     n_values: Optional[list] = None) -> Iterator[VotingInstance]:
    """
    Seeded stream of random instances with sizes drawn uniformly from the
    inclusive ranges (or from ``n_values`` when given).
    """
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.choice(n_values)) if n_values else int(rng.integers(n_range[0], n_range[1] + 1))
        m = int(rng.integers(m_range[0], m_range[1] + 1))
        yield VotingInstance(m, tuple(random_ranking(m, rng) for _ in range(n)))

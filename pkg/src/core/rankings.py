from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, FrozenSet

from src.core.errors import InvalidInputError

Candidate = int


@dataclass(frozen=True, order=True)
class Ranking:
    """
    A strict total order over the candidates 1..m, most preferred first.

    Rankings compare lexicographically by their order, which is the tie-break
    used by every search that has to pick one result among many.
    """
    order: Tuple[int, ...]
    _positions: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        try:
            order = tuple(int(candidate) for candidate in self.order)
        except (TypeError, ValueError):
            raise InvalidInputError(f"ranking entries must be integers, got {self.order!r}")
        if any(isinstance(candidate, bool) or candidate != value for candidate, value in zip(self.order, order)):
            raise InvalidInputError(f"ranking entries must be integers, got {self.order!r}")

        m = len(order)
        if m == 0:
            raise InvalidInputError("a ranking needs at least one candidate")

        positions = [0] * (m + 1)
        for index, candidate in enumerate(order, start=1):
            if not 1 <= candidate <= m:
                raise InvalidInputError(f"candidate {candidate} is out of range 1..{m}")
            if positions[candidate]:
                raise InvalidInputError(f"candidate {candidate} appears twice in the ranking")
            positions[candidate] = index

        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_positions", tuple(positions))

    @classmethod
    def identity(cls, m: int) -> "Ranking":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_blocks(cls, *blocks: Sequence[int]) -> "Ranking":
        """Build a ranking from bracketed groups, e.g. ``from_blocks([1, 2], [4, 3])``."""
        return cls(tuple(candidate for block in blocks for candidate in block))

    @property
    def m(self) -> int:
        return len(self.order)

    def rank(self, candidate: Candidate) -> int:
        """1-based position of ``candidate``."""
        if not 1 <= candidate <= self.m:
            raise InvalidInputError(f"candidate {candidate} is out of range 1..{self.m}")
        return self._positions[candidate]

    def reversed(self) -> "Ranking":
        return Ranking(self.order[::-1])

    def transposed(self, a: Candidate, b: Candidate) -> "Ranking":
        """Exchange the positions of two (not necessarily adjacent) candidates."""
        order = list(self.order)
        i, j = self.rank(a) - 1, self.rank(b) - 1
        order[i], order[j] = order[j], order[i]
        return Ranking(tuple(order))

    def to_list(self) -> List[int]:
        return list(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __str__(self) -> str:
        return "[" + ",".join(str(candidate) for candidate in self.order) + "]"


@dataclass(frozen=True)
class VotingInstance:
    """
    Candidate count plus one ranking per voter. Voters are numbered from 1.
    """
    m: int
    voters: Tuple[Ranking, ...]

    def __post_init__(self):
        if self.m < 1:
            raise InvalidInputError(f"candidate count must be positive, got {self.m}")

        voters = tuple(voter if isinstance(voter, Ranking) else Ranking(voter) for voter in self.voters)
        if not voters:
            raise InvalidInputError("a voting instance needs at least one voter")
        for number, voter in enumerate(voters, start=1):
            if voter.m != self.m:
                raise InvalidInputError(f"voter {number} ranks {voter.m} candidates, expected {self.m}")

        object.__setattr__(self, "voters", voters)

    @classmethod
    def from_rankings(cls, rankings: Iterable[Sequence[int]]) -> "VotingInstance":
        voters = tuple(ranking if isinstance(ranking, Ranking) else Ranking(ranking) for ranking in rankings)
        if not voters:
            raise InvalidInputError("a voting instance needs at least one voter")
        return cls(voters[0].m, voters)

    @property
    def n(self) -> int:
        return len(self.voters)

    def voter(self, number: int) -> Ranking:
        if not 1 <= number <= self.n:
            raise InvalidInputError(f"voter {number} is out of range 1..{self.n}")
        return self.voters[number - 1]

    def check_ranking(self, ranking: Ranking, name: str = "ranking") -> Ranking:
        if not isinstance(ranking, Ranking):
            ranking = Ranking(ranking)
        if ranking.m != self.m:
            raise InvalidInputError(f"{name} ranks {ranking.m} candidates but the instance has {self.m}")
        return ranking

    def subinstance(self, numbers: Iterable[int]) -> "VotingInstance":
        """Restrict the instance to the given voter numbers (1-based, order kept)."""
        numbers = list(numbers)
        return VotingInstance(self.m, tuple(self.voter(number) for number in numbers))

    def with_voters(self, extra: Iterable[Ranking]) -> "VotingInstance":
        return VotingInstance(self.m, self.voters + tuple(extra))

    @cached_property
    def pairwise_support(self) -> Tuple[Tuple[int, ...], ...]:
        """``pairwise_support[a][b]`` is the number of voters preferring a to b."""
        support = [[0] * (self.m + 1) for _ in range(self.m + 1)]
        for voter in self.voters:
            order = voter.order
            for i, a in enumerate(order):
                row = support[a]
                for b in order[i + 1:]:
                    row[b] += 1
        return tuple(tuple(row) for row in support)


@dataclass(frozen=True)
class Swap:
    """
    Exchange of the entries at positions ``position`` and ``position + 1``.

    ``pair`` is (b, a), the entries found there before the swap; afterwards
    they read (a, b), so ``a`` moves up.
    """
    position: int
    pair: Tuple[int, int]

    def __post_init__(self):
        if self.position < 1:
            raise InvalidInputError(f"swap position must be at least 1, got {self.position}")
        if self.pair[0] == self.pair[1]:
            raise InvalidInputError(f"swap must exchange two distinct candidates, got {self.pair}")

    @property
    def moving_up(self) -> Candidate:
        return self.pair[1]

    @property
    def moving_down(self) -> Candidate:
        return self.pair[0]

    @property
    def after(self) -> Tuple[int, int]:
        return self.pair[1], self.pair[0]


@dataclass(frozen=True)
class DisagreementSet:
    """Unordered candidate pairs, stored as (smaller, larger)."""
    pairs: FrozenSet[Tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self.pairs))

    def __contains__(self, pair) -> bool:
        a, b = pair
        return (min(a, b), max(a, b)) in self.pairs


def _check_same_candidates(a: Ranking, b: Ranking):
    if a.m != b.m:
        raise InvalidInputError(f"rankings are over different candidate sets ({a.m} vs {b.m} candidates)")


def count_inversions(sequence: Sequence[int]) -> int:
    """Number of out-of-order pairs, counted with a bottom-up merge sort."""
    items = list(sequence)
    size = len(items)
    buffer = [0] * size
    inversions = 0
    width = 1

    while width < size:
        for lo in range(0, size, 2 * width):
            mid = min(lo + width, size)
            hi = min(lo + 2 * width, size)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if items[i] <= items[j]:
                    buffer[k] = items[i]
                    i += 1
                else:
                    buffer[k] = items[j]
                    j += 1
                    inversions += mid - i
                k += 1
            while i < mid:
                buffer[k] = items[i]
                i += 1
                k += 1
            while j < hi:
                buffer[k] = items[j]
                j += 1
                k += 1
        items, buffer = buffer, items
        width *= 2

    return inversions


def kendall_distance(a: Ranking, b: Ranking) -> int:
    """
    Number of candidate pairs that ``a`` and ``b`` order oppositely.

    Args:
        a (Ranking): First ranking.
        b (Ranking): Second ranking, over the same candidates.

    Returns:
        int: Distance in 0..m(m-1)/2.

    Raises:
        InvalidInputError: If the rankings cover different candidate sets.
    """
    _check_same_candidates(a, b)
    positions = a._positions
    return count_inversions([positions[candidate] for candidate in b.order])


def prefers(voter: Ranking, a: Candidate, b: Candidate) -> bool:
    if a == b:
        raise InvalidInputError(f"cannot compare candidate {a} with itself")
    return voter.rank(a) < voter.rank(b)


def disagreement_set(a: Ranking, b: Ranking) -> DisagreementSet:
    _check_same_candidates(a, b)
    pairs = set()
    order = a.order
    for i, x in enumerate(order):
        rank_x = b.rank(x)
        for y in order[i + 1:]:
            if b.rank(y) < rank_x:
                pairs.add((min(x, y), max(x, y)))
    return DisagreementSet(frozenset(pairs))


def bubble_swap_path(source: Ranking, target: Ranking) -> List[Swap]:
    """
    Adjacent swaps turning ``source`` into ``target``.

    Bubble-sorts ``source`` under the order induced by ``target``, sweeping left
    to right, so the path is canonical and has length K(source, target).
    """
    _check_same_candidates(source, target)
    key = target._positions
    current = list(source.order)
    path = []

    for sweep in range(len(current) - 1):
        swapped = False
        for p in range(len(current) - 1 - sweep):
            if key[current[p]] > key[current[p + 1]]:
                path.append(Swap(p + 1, (current[p], current[p + 1])))
                current[p], current[p + 1] = current[p + 1], current[p]
                swapped = True
        if not swapped:
            break

    return path


def is_good_swap(swap: Swap, voter: Ranking) -> bool:
    return prefers(voter, swap.moving_up, swap.moving_down)


def apply_swap(ranking: Ranking, swap: Swap) -> Ranking:
    p = swap.position
    if p > ranking.m - 1:
        raise InvalidInputError(f"swap position {p} is outside 1..{ranking.m - 1}")
    if ranking.order[p - 1:p + 1] != tuple(swap.pair):
        raise InvalidInputError(
            f"stale swap: expected {swap.pair} at positions {p},{p + 1} but found {ranking.order[p - 1:p + 1]}"
        )
    order = list(ranking.order)
    order[p - 1], order[p] = order[p], order[p - 1]
    return Ranking(tuple(order))


def adjacent_swaps(ranking: Ranking) -> List[Swap]:
    return [Swap(p, (ranking.order[p - 1], ranking.order[p])) for p in range(1, ranking.m)]


def good_swaps(ranking: Ranking, voter: Ranking) -> List[Swap]:
    """Adjacent swaps of ``ranking`` that bring it one step closer to ``voter``."""
    _check_same_candidates(ranking, voter)
    return [swap for swap in adjacent_swaps(ranking) if is_good_swap(swap, voter)]


def leftmost_good_swap(ranking: Ranking, voter: Ranking) -> Optional[Swap]:
    _check_same_candidates(ranking, voter)
    for swap in adjacent_swaps(ranking):
        if is_good_swap(swap, voter):
            return swap
    return None


def all_rankings(m: int) -> Iterator[Ranking]:
    """All m! rankings in lexicographic order."""
    for order in permutations(range(1, m + 1)):
        yield Ranking(order)

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

import networkx as nx

from src.config import search_config
from src.core import InvalidInputError, Ranking, VotingInstance


@dataclass(frozen=True)
class MajorityGraph:
    """
    Directed graph on the candidates with an arc a -> b whenever strictly more
    voters prefer a to b. Exact ties give no arc.
    """
    m: int
    n: int
    arcs: FrozenSet[Tuple[int, int]]
    support: Tuple[Tuple[int, ...], ...]

    def has_arc(self, a: int, b: int) -> bool:
        return (a, b) in self.arcs

    def support_of(self, a: int, b: int) -> int:
        """Number of voters preferring a to b."""
        return self.support[a][b]

    def successors(self, a: int) -> List[int]:
        return sorted(b for (x, b) in self.arcs if x == a)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.m + 1))
        graph.add_edges_from(sorted(self.arcs))
        return graph

    def find_cycle(self) -> Optional[List[int]]:
        """A directed cycle as a candidate list, or None if the graph is acyclic."""
        try:
            edges = nx.find_cycle(self.to_networkx(), orientation="original")
        except nx.NetworkXNoCycle:
            return None
        return [edge[0] for edge in edges]


@dataclass(frozen=True)
class OrderedPartition:
    """
    Ordered blocks C1, ..., Ck of the candidates such that every voter ranks
    each block entirely above the later ones.
    """
    blocks: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(block) for block in self.blocks)
        seen: Set[int] = set()
        for block in blocks:
            if not block:
                raise InvalidInputError("partition blocks must be nonempty")
            if seen & block:
                raise InvalidInputError(f"partition blocks overlap on {sorted(seen & block)}")
            seen |= block
        if seen != set(range(1, len(seen) + 1)):
            raise InvalidInputError("partition blocks must cover the candidates 1..m")
        object.__setattr__(self, "blocks", blocks)

    @property
    def m(self) -> int:
        return sum(len(block) for block in self.blocks)

    @property
    def block_sizes(self) -> List[int]:
        return [len(block) for block in self.blocks]

    @property
    def search_space_size(self) -> int:
        """Number of rankings that keep every block contiguous and in order."""
        return prod(factorial(size) for size in self.block_sizes)

    def is_preserved_by(self, ranking: Ranking) -> bool:
        start = 0
        for block in self.blocks:
            if set(ranking.order[start:start + len(block)]) != block:
                return False
            start += len(block)
        return True

    def as_lists(self) -> List[List[int]]:
        return [sorted(block) for block in self.blocks]

    @classmethod
    def trivial(cls, m: int) -> "OrderedPartition":
        return cls((frozenset(range(1, m + 1)),))


def build_majority_graph(inst: VotingInstance) -> MajorityGraph:
    support = inst.pairwise_support
    arcs = frozenset(
        (a, b)
        for a in range(1, inst.m + 1)
        for b in range(1, inst.m + 1)
        if a != b and support[a][b] > support[b][a]
    )
    return MajorityGraph(inst.m, inst.n, arcs, support)


def is_acyclic(graph: MajorityGraph) -> bool:
    return nx.is_directed_acyclic_graph(graph.to_networkx())


def is_tournament(graph: MajorityGraph) -> bool:
    return len(graph.arcs) == graph.m * (graph.m - 1) // 2


def is_topologically_sorted(inst: VotingInstance, ranking: Ranking) -> bool:
    ranking = inst.check_ranking(ranking)
    support = inst.pairwise_support
    order = ranking.order
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            if support[b][a] > support[a][b]:
                return False
    return True


def _toposort_all_bt(
        prefix: List[int],
        placed: List[bool],
        indeg: List[int],
        successors: Dict[int, List[int]],
) -> Iterator[Tuple[int, ...]]:
    """
    Extend a partial ordering in every valid way, smallest free candidate first.

    :param prefix: candidates already placed, in order
    :param placed: placed[c] is True once c is in the prefix
    :param indeg: number of unplaced predecessors of each candidate
    :param successors: arc lists of the majority graph
    """
    m = len(placed) - 1
    if len(prefix) == m:
        yield tuple(prefix)
        return

    for candidate in range(1, m + 1):
        if placed[candidate] or indeg[candidate]:
            continue

        placed[candidate] = True
        prefix.append(candidate)
        for succ in successors[candidate]:
            indeg[succ] -= 1

        yield from _toposort_all_bt(prefix, placed, indeg, successors)

        for succ in successors[candidate]:
            indeg[succ] += 1
        prefix.pop()
        placed[candidate] = False


def topological_sorts(inst: VotingInstance, limit: Optional[int] = None) -> Iterator[Ranking]:
    """
    Lazily enumerate topologically sorted rankings in lexicographic order.

    :param inst: voting instance
    :param limit: maximum number of rankings to yield (configured default when None)
    :returns: iterator over rankings; empty when the majority graph has a cycle
    """
    limit = search_config.topsort_limit if limit is None else limit
    graph = build_majority_graph(inst)
    if not is_acyclic(graph):
        return

    successors: Dict[int, List[int]] = {candidate: [] for candidate in range(1, inst.m + 1)}
    indeg = [0] * (inst.m + 1)
    for a, b in sorted(graph.arcs):
        successors[a].append(b)
        indeg[b] += 1

    produced = 0
    for order in _toposort_all_bt([], [False] * (inst.m + 1), indeg, successors):
        if produced >= limit:
            return
        produced += 1
        yield Ranking(order)


def preserved_partition(inst: VotingInstance) -> OrderedPartition:
    """
    Finest ordered partition preserved by every voter.

    A cut after position p exists iff all voters share the same top-p set.
    """
    reference = inst.voters[0].order
    tops = [set() for _ in inst.voters]
    blocks = []
    current: List[int] = []

    for p in range(inst.m):
        for top, voter in zip(tops, inst.voters):
            top.add(voter.order[p])
        current.append(reference[p])
        if all(top == tops[0] for top in tops):
            blocks.append(frozenset(current))
            current = []

    return OrderedPartition(tuple(blocks))


def c_sorted_level(inst: VotingInstance, ranking: Ranking) -> Fraction:
    """
    Largest c such that every pair ordered by ``ranking`` is agreed by at least
    a c-fraction of the voters.
    """
    ranking = inst.check_ranking(ranking)
    if inst.m < 2:
        raise InvalidInputError("c-sortedness needs at least two candidates")

    support = inst.pairwise_support
    order = ranking.order
    weakest = min(support[a][b] for i, a in enumerate(order) for b in order[i + 1:])
    return Fraction(weakest, inst.n)


def export_dot(graph: MajorityGraph) -> str:
    lines = ["digraph majority {"]
    for candidate in range(1, graph.m + 1):
        lines.append(f"    {candidate};")
    for a, b in sorted(graph.arcs):
        lines.append(f"    {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"

import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from itertools import chain, permutations, product
from typing import Callable, Iterator, List, Optional, Tuple

from tqdm import tqdm

from src.config import log_config, search_config
from src.core import Ranking, SearchBudgetExceeded, VotingInstance, count_inversions, kendall_distance
from src.majority import OrderedPartition, preserved_partition
from src.utils import setup_logger

logger = setup_logger(log_config.log_path("search.log"), log_config.level)

# accept(number preferring the challenger, number preferring the incumbent)
Acceptor = Callable[[int, int], bool]


@dataclass(frozen=True)
class SearchOutcome:
    witness: Optional[Ranking]
    searched: int
    space: int


class ChallengerSpace:
    """
    Rankings that keep every block of an ordered partition contiguous and in
    block order, enumerated lexicographically.
    """

    def __init__(self, partition: OrderedPartition):
        """
        :param partition: Ordered partition whose blocks stay contiguous
        """
        self.partition = partition
        self.blocks = [tuple(sorted(block)) for block in partition.blocks]
        self.size = partition.search_space_size

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return chain.from_iterable(self.iter_chunk(lead) for _, lead in self.chunks())

    def chunks(self) -> List[Tuple[int, int]]:
        """
        Split the space into contiguous chunks, one per leading candidate.

        :return: (global index of the chunk's first ranking, leading candidate) pairs
        """
        first = self.blocks[0]
        chunk_size = self.size // len(first)
        return [(i * chunk_size, lead) for i, lead in enumerate(first)]

    def iter_chunk(self, lead: int) -> Iterator[Tuple[int, ...]]:
        rest = tuple(candidate for candidate in self.blocks[0] if candidate != lead)
        tails = [list(permutations(block)) for block in self.blocks[1:]]
        for head in permutations(rest):
            for tail in product(*tails):
                yield (lead,) + head + tuple(chain.from_iterable(tail))


class ChallengerSearch:
    """
    Exhaustive search for the lexicographically smallest challenger accepted
    against a fixed incumbent.
    """

    def __init__(self,
                 inst: VotingInstance,
                 incumbent: Ranking,
                 partition: Optional[OrderedPartition] = None,
                 budget: Optional[int] = None,
                 threads: Optional[int] = None,
                 progress: bool = False):
        """
        :param inst: Voting instance
        :param incumbent: Ranking being challenged
        :param partition: Blocks to keep contiguous (finest preserved partition when None)
        :param budget: Maximum number of challengers (configured default when None)
        :param threads: Worker threads (configured default when None)
        :param progress: Show a tqdm progress bar
        """
        self.inst = inst
        self.incumbent = inst.check_ranking(incumbent, "incumbent")
        self.partition = preserved_partition(inst) if partition is None else partition
        self.space = ChallengerSpace(self.partition)
        self.budget = search_config.resolve_budget(budget)
        self.threads = search_config.resolve_threads(threads)
        self.progress = progress

        self.voter_positions = [voter._positions for voter in inst.voters]
        self.baseline = [kendall_distance(self.incumbent, voter) for voter in inst.voters]

    def tally(self, order: Tuple[int, ...]) -> Tuple[int, int]:
        prefer_challenger = prefer_incumbent = 0
        for positions, base in zip(self.voter_positions, self.baseline):
            distance = count_inversions([positions[candidate] for candidate in order])
            if distance < base:
                prefer_challenger += 1
            elif distance > base:
                prefer_incumbent += 1
        return prefer_challenger, prefer_incumbent

    def run(self, accept: Acceptor) -> SearchOutcome:
        if len(self.space) > self.budget:
            logger.error(f"Search space of {len(self.space)} rankings exceeds budget {self.budget}")
            raise SearchBudgetExceeded(len(self.space), self.budget)

        logger.info(f"Searching {len(self.space)} challengers "
                    f"(blocks {self.partition.block_sizes}, threads {self.threads})")

        if self.threads == 1 or len(self.space.chunks()) == 1:
            found = self._scan_sequential(accept)
        else:
            found = self._scan_parallel(accept)

        if found is None:
            outcome = SearchOutcome(None, len(self.space), len(self.space))
        else:
            index, order = found
            outcome = SearchOutcome(Ranking(order), index + 1, len(self.space))

        logger.info(f"SUMMARY: witness={outcome.witness}, searched {outcome.searched}/{outcome.space}")
        return outcome

    def _scan_sequential(self, accept: Acceptor) -> Optional[Tuple[int, Tuple[int, ...]]]:
        rankings = tqdm(self.space, total=len(self.space), desc="Searching challengers",
                        ncols=100, ascii=True, disable=not self.progress)
        for index, order in enumerate(rankings):
            if accept(*self.tally(order)):
                return index, order
        return None

    def _scan_parallel(self, accept: Acceptor) -> Optional[Tuple[int, Tuple[int, ...]]]:
        # Smallest witness index seen by any worker; later chunks stop once past it.
        best = [len(self.space)]
        lock = threading.Lock()

        def scan(offset: int, lead: int) -> Optional[Tuple[int, Tuple[int, ...]]]:
            for local, order in enumerate(self.space.iter_chunk(lead)):
                index = offset + local
                if index >= best[0]:
                    return None
                if accept(*self.tally(order)):
                    with lock:
                        best[0] = min(best[0], index)
                    return index, order
            return None

        found = []
        chunks = self.space.chunks()
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            futures = [executor.submit(scan, offset, lead) for offset, lead in chunks]

            with tqdm(total=len(futures), desc="Searching chunks", ncols=100, ascii=True,
                      disable=not self.progress) as progress:
                for future in as_completed(futures):
                    result = future.result()
                    if result is not None:
                        found.append(result)
                    progress.update(1)

        return min(found) if found else None

import os
from fractions import Fraction
from itertools import permutations
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from src.config import log_config
from src.core import Ranking, VotingInstance, all_rankings, kendall_distance
from src.generators import condorcet_beater, extended_condorcet, random_ranking
from src.kemeny import improvement_chain, kemeny_consensus, kemeny_rank, smaller_kemeny_rank
from src.majority import build_majority_graph, c_sorted_level, is_acyclic, is_topologically_sorted, topological_sorts
from src.popularity import Mode, compare, find_all_closer, verify_popular
from src.small_n import (extract_smaller_kemeny, kemeny_to_acr_instance, pad_with_incumbent,
                         three_all_closer_ranking, triple_copy)
from src.experiments.oracles import all_closer_exists, distance_table, popular_mask
from src.utils import setup_logger

SUITES = ["hierarchy", "equivalence", "three_quarter", "acr3", "padding", "kemeny_reduction", "kemeny_exact",
          "condorcet"]


def _random_instance(rng: np.random.Generator, n: int, m: int) -> VotingInstance:
    return VotingInstance(m, tuple(random_ranking(m, rng) for _ in range(n)))


class ExperimentRunner:
    """
    Seeded property suites over random instances. Every trial produces one row
    counting the checks it made and the violations it found.
    """

    def __init__(self, seed: int = 0, progress: bool = True):
        """
        Initialize the runner

        :param seed: Base seed; trial t of suite s uses default_rng([seed, s, t])
        :param progress: Show a tqdm progress bar per suite
        """
        self.seed = seed
        self.progress = progress
        self.output_data_dir = log_config.data_dir
        self.logger = setup_logger(log_config.log_path("experiments.log"), log_config.level)

    def _rng(self, suite: str, trial: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, SUITES.index(suite), trial])

    # Each suite returns (n, m, checks, violations, detail).

    def hierarchy(self, rng: np.random.Generator):
        inst = _random_instance(rng, int(rng.integers(1, 7)), int(rng.integers(1, 6)))
        rankings = list(all_rankings(inst.m))
        table = distance_table(inst, rankings)
        simple = popular_mask(table, Mode.SIMPLE)
        absolute = popular_mask(table, Mode.ABSOLUTE)
        topsorted = np.array([is_topologically_sorted(inst, r) for r in rankings])
        ranks = table.sum(axis=1)
        minimizers = ranks == ranks.min()

        violations = int((simple & ~absolute).sum() + (absolute & ~topsorted).sum() + (topsorted & ~minimizers).sum())
        if is_acyclic(build_majority_graph(inst)):
            violations += int((topsorted != minimizers).sum())
        if kemeny_consensus(inst).optimum != int(ranks.min()):
            violations += 1
        return inst.n, inst.m, 4 * len(rankings) + 1, violations, ""

    def equivalence(self, rng: np.random.Generator):
        inst = _random_instance(rng, int(rng.integers(1, 6)), int(rng.integers(1, 6)))
        checks = violations = 0
        for ranking in topological_sorts(inst):
            absolute = verify_popular(inst, ranking, Mode.ABSOLUTE, threads=1).status
            simple = verify_popular(inst, ranking, Mode.SIMPLE, threads=1).status
            checks += 1
            violations += int(absolute != simple)
        return inst.n, inst.m, checks, violations, ""

    def three_quarter(self, rng: np.random.Generator):
        n, m = int(rng.integers(4, 9)), int(rng.integers(2, 6))
        base = random_ranking(m, rng)
        perturbed = n // 4
        voters = [random_ranking(m, rng) for _ in range(perturbed)] + [base] * (n - perturbed)
        inst = VotingInstance(m, tuple(voters))

        if c_sorted_level(inst, base) < Fraction(3, 4):
            return n, m, 1, 1, f"construction gave c < 3/4 for {base}"
        verdict = verify_popular(inst, base, Mode.ABSOLUTE, threads=1)
        return n, m, 1, int(not verdict.is_popular), "" if verdict.is_popular else f"witness {verdict.witness}"

    def acr3(self, rng: np.random.Generator):
        m = int(rng.integers(1, 7))
        inst = _random_instance(rng, 3, m)
        while not is_acyclic(build_majority_graph(inst)):
            inst = _random_instance(rng, 3, m)
        pi = random_ranking(m, rng)

        outcome = three_all_closer_ranking(inst, pi)
        expected = all_closer_exists(inst, pi)
        violations = int((outcome.result is not None) != expected)
        if outcome.result is not None and len(compare(inst, outcome.result, pi).prefer_left) != 3:
            violations += 1
        return 3, m, 2, violations, outcome.case_taken.value

    def padding(self, rng: np.random.Generator):
        m = int(rng.integers(1, 6))
        inst = _random_instance(rng, 3, m)
        pi = random_ranking(m, rng)

        acr = find_all_closer(inst, pi, pruned=False, threads=1) is not None
        violations = 0
        for copies in (1, 2):
            padded = pad_with_incumbent(inst, pi, copies)
            aurv = not verify_popular(padded, pi, Mode.ABSOLUTE, pruned=False, threads=1).is_popular
            violations += int(aurv != acr)
        return 3, m, 2, violations, ""

    def kemeny_reduction(self, rng: np.random.Generator):
        m = int(rng.integers(2, 5))
        inst = _random_instance(rng, 3, m)
        pi = random_ranking(m, rng)

        better = smaller_kemeny_rank(inst, pi)
        if better is None:
            return 3, m, 0, 0, "pi is a consensus"

        transformed, pi_prime = kemeny_to_acr_instance(inst, pi)
        violations = int(len(compare(transformed, triple_copy(better), pi_prime).prefer_left) != 3)
        witness = find_all_closer(transformed, pi_prime, threads=1)
        if witness is None:
            return 3, m, 2, violations + 1, "no all-preferred ranking in the transformed instance"
        extracted = extract_smaller_kemeny(inst, pi, witness)
        violations += int(kemeny_rank(inst, extracted) >= kemeny_rank(inst, pi))
        return 3, m, 2, violations, ""

    def kemeny_exact(self, rng: np.random.Generator):
        inst = _random_instance(rng, int(rng.integers(1, 6)), int(rng.integers(1, 7)))
        table = distance_table(inst)
        optimum = int(table.sum(axis=1).min())

        chain = improvement_chain(inst, random_ranking(inst.m, rng))
        bound = inst.n * inst.m * (inst.m - 1) // 2
        violations = int(kemeny_consensus(inst).optimum != optimum)
        violations += int(kemeny_rank(inst, chain[-1]) != optimum) + int(len(chain) - 1 > bound)
        return inst.n, inst.m, 3, violations, ""

    def condorcet(self, rng: np.random.Generator):
        n = int(rng.integers(3, 7))
        inst = extended_condorcet(n)
        violations = checks = 0
        for order in permutations(range(1, n + 1)):
            pi = Ranking(order)
            tally = compare(inst, condorcet_beater(inst, pi), pi)
            checks += 1
            violations += int((len(tally.prefer_left), len(tally.prefer_right)) != (n - 1, 1))
        return n, n, checks, violations, ""

    def run_suite(self, suite: str, count: int) -> List[Dict[str, Any]]:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")

        trial_fn: Callable = getattr(self, suite)
        rows = []
        for trial in tqdm(range(count), desc=suite, ncols=100, ascii=True, disable=not self.progress):
            try:
                n, m, checks, violations, detail = trial_fn(self._rng(suite, trial))
            except Exception as e:
                self.logger.error(f"{suite} trial {trial} failed: {e}", exc_info=True)
                raise
            rows.append({"suite": suite, "trial": trial, "seed": self.seed, "n": n, "m": m,
                         "checks": checks, "violations": violations, "detail": detail})

        total = sum(row["violations"] for row in rows)
        self.logger.info(f"SUMMARY: {suite}: {count} trials, {total} violations")
        return rows

    def run(self, suites: Sequence[str], count: int) -> pd.DataFrame:
        rows = []
        for suite in suites:
            rows.extend(self.run_suite(suite, count))
        return pd.DataFrame(rows, columns=["suite", "trial", "seed", "n", "m", "checks", "violations", "detail"])

    @staticmethod
    def summarize(df: pd.DataFrame) -> pd.DataFrame:
        return df.groupby("suite", sort=False)[["checks", "violations"]].sum().reset_index()

    def save_to_csv(self, df: pd.DataFrame, output_file: Optional[str] = None) -> str:
        path = output_file or os.path.join(self.output_data_dir, f"experiments_seed{self.seed}.csv")
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        df.to_csv(path, index=False, encoding="utf-8-sig")
        self.logger.info(f"Saved {len(df)} experiment rows to {path}")
        return path

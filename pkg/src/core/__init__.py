from .errors import (RankingError, InvalidInputError, InstanceFormatError, PreconditionError,
                     SearchBudgetExceeded, InvariantViolation)
from .rankings import (Candidate, Ranking, VotingInstance, Swap, DisagreementSet, count_inversions,
                       kendall_distance, prefers, disagreement_set, bubble_swap_path, is_good_swap,
                       apply_swap, adjacent_swaps, good_swaps, leftmost_good_swap, all_rankings)

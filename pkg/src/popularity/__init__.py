from .comparison import Mode, ComparisonTally, compare, wins, is_more_popular
from .search import ChallengerSpace, ChallengerSearch, SearchOutcome
from .verify import (Status, PopularityVerdict, Threshold, verify_popular, popular_rankings, find_popular,
                     find_all_closer, constrained_improvement_search)
from .lift import lift_simple_witness_to_absolute

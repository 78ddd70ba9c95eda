from .oracles import distance_table, popular_mask, popular_set, all_closer_exists
from .runner import SUITES, ExperimentRunner

from .characterizations import verify_popular_small, verify_popular_4_tournament, popular_by_subinstance
from .all_closer import AcrCase, AcrOutcome, three_all_closer_ranking
from .reductions import (pad_with_incumbent, aurv_via_acr, copy_ranking, triple_copy, kemeny_to_acr_instance,
                         split_copies, extract_smaller_kemeny)

from .kemeny_consensus import (KemenyResult, kemeny_rank, kemeny_consensus, smaller_kemeny_rank, improvement_chain,
                               consensus_by_improvement)

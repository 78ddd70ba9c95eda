from .majority_graph import (MajorityGraph, OrderedPartition, build_majority_graph, is_acyclic, is_tournament,
                             is_topologically_sorted, topological_sorts, preserved_partition, c_sorted_level,
                             export_dot)

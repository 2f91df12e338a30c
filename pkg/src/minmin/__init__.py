"""Coalition partitions and the minmin coalition number of small graphs."""

from .coalition import (
    CminResult,
    CPartitionCertificate,
    Justification,
    Method,
    certificate_is_valid,
    cmin_bruteforce,
    coalition_number_bruteforce,
    is_c_partition,
    is_coalition,
    is_minimal_c_partition,
    merge_blocks,
)
from .domination import domination_number, is_dominating_set, undominated_vertices
from .generators import generate
from .graph import (
    Graph,
    build_graph,
    closed_neighborhood,
    induced_subgraph,
    join_graphs,
    universal_vertices,
)
from .graph6 import graph6_decode, graph6_encode
from .partitions import SetPartition, coarsenings, enumerate_partitions, is_refinement
from .recognizers import (
    cmin_dispatch,
    cmin_formula_cycle,
    cmin_formula_tree,
    is_family_F,
    is_family_M,
    property_star,
    strip_universal,
    test_cmin_eq_2,
    test_cmin_ge_3,
    test_cmin_ge_4,
)

__all__ = [name for name in dir() if not name.startswith("_")]

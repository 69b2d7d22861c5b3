"""Finite distributive lattices as minimizer sets of M♮-concave set functions."""

from latmin.constructions import (
    ConstructionVariant,
    SetFunctionTable,
    build_graph,
    build_prop2,
    build_table,
)
from latmin.matching import (
    NEG_INF,
    Matching,
    WeightedBipartiteGraph,
    enumerate_matchings_bruteforce,
    max_weight_matching_saturating,
    max_weight_matching_within,
)
from latmin.partition import (
    BipartiteGraphPlain,
    DyadicSum,
    bis_to_poset,
    count_bis_bruteforce,
    estimate_ideal_count,
    g_r,
    partition_sum_dyadic,
)
from latmin.poset import (
    Poset,
    SubsetFamily,
    enumerate_ideals,
    is_ideal,
    is_union_intersection_closed,
    join_irreducibles,
    max_chain_length,
    poset_from_relations,
    verify_birkhoff_roundtrip,
)
from latmin.verify import (
    ViolationKind,
    ViolationWitness,
    check_min_condition,
    is_generalized_matroid,
    is_mnat_concave,
    is_submodular,
    maximizers,
    minimizers,
)

__version__ = "0.1.0"

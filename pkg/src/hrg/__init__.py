"""Highly-regular graphs: collapsed adjacency matrices, index, and the distance-regular characterisation."""

from hrg.classify import (
    BoundProfile,
    IntersectionArray,
    bound_profile,
    index_lower_bound,
    is_distance_regular,
    is_strongly_regular,
    theorem1_classify,
    tridiagonal_form,
)
from hrg.families import (
    p_family_member,
    prop_a1_classify,
    prop_a3_product,
    theorem41_construct,
    theorem_a6_witnesses,
    torus,
)
from hrg.graph import (
    INF,
    DistanceData,
    Graph,
    cartesian_product,
    complement,
    cycle,
    distances,
    from_edge_list,
    from_graph6,
    induced_degree_sequence,
    to_graph6,
)
from hrg.refinement import (
    Cam,
    HrgReport,
    RootedPartition,
    analyze_hrg,
    prop23_checks,
    quotient_matrix,
    rooted_coarsest_partition,
    verify_cam,
)
from hrg.schemes import (
    AssociationScheme,
    relation_graph,
    theorem5_check,
    verify_scheme,
    wl_graph,
    wl_scheme,
)
from hrg.field import FiniteField, gf
from hrg.spectral import (
    SpectralData,
    appendix_b_check,
    crossed_multiplicities,
    eigendecompose,
    intertwine_check,
)

__version__ = "0.1.0"

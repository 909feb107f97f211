"""Exact automorphism, clique and block computations for Cayley graphs over Z_2^n,
with the augmented cube AQ_n as the main subject."""

from .aut import (
    full_aut,
    group_automorphisms_fixing_S,
    is_normal_cayley,
    paper_stabilizer_generators,
    pointwise_neighborhood_stabilizer,
    translation,
    verify_semidirect,
    vertex_stabilizer,
)
from .blocks import blocks_containing_e, ge_closed_subspaces, minimal_block, verify_block_subgroup_correspondence
from .cayley import (
    CayleyGraph,
    GeneratorSet,
    SmallGraph,
    augmented_cube,
    augmented_generators,
    build_cayley,
    complement,
    distance_partition,
    folded_hypercube,
    hypercube,
    induced_subgraph,
)
from .cliques import (
    Clique,
    aq4_named_cliques,
    clique_orbits,
    inter_clique_edge_counts,
    max_cliques,
    verify_aq4_structure,
    verify_clique_block,
)
from .gf2 import GF2Matrix, GF2Vector, Subspace, coset_partition, is_subspace, mat_apply, mat_inverse, span, vec_add
from .perm import (
    GroupType,
    PermGroup,
    Permutation,
    closure,
    graph_automorphisms,
    induced_action,
    orbit,
    orbits,
    permutation_is_linear,
    recognize,
)

__all__ = [
    "aq4_named_cliques",
    "augmented_cube",
    "augmented_generators",
    "blocks_containing_e",
    "build_cayley",
    "CayleyGraph",
    "Clique",
    "clique_orbits",
    "closure",
    "complement",
    "coset_partition",
    "distance_partition",
    "folded_hypercube",
    "full_aut",
    "ge_closed_subspaces",
    "GeneratorSet",
    "GF2Matrix",
    "GF2Vector",
    "graph_automorphisms",
    "group_automorphisms_fixing_S",
    "GroupType",
    "hypercube",
    "induced_action",
    "induced_subgraph",
    "inter_clique_edge_counts",
    "is_normal_cayley",
    "is_subspace",
    "mat_apply",
    "mat_inverse",
    "max_cliques",
    "minimal_block",
    "orbit",
    "orbits",
    "paper_stabilizer_generators",
    "PermGroup",
    "Permutation",
    "permutation_is_linear",
    "pointwise_neighborhood_stabilizer",
    "recognize",
    "SmallGraph",
    "span",
    "Subspace",
    "translation",
    "vec_add",
    "verify_aq4_structure",
    "verify_block_subgroup_correspondence",
    "verify_clique_block",
    "verify_semidirect",
    "vertex_stabilizer",
]

__version__ = "0.1.0"

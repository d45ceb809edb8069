"""Subset indices and stability of finite groups via Cayley graphs."""

from .cayley import Graph, boundary_set, cayley_graph, export_dot, graph_components
from .groups import (
    ElementSet,
    FiniteGroup,
    GroupError,
    close_permutation_generators,
    coset_partition,
    element_order,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_elementary_abelian,
    make_semidirect,
    subgroup_generated,
    validate_table,
)
from .solver import (
    BudgetExceeded,
    SolveBudget,
    berge_lower_bound,
    brute_force_alpha_i,
    enumerate_maximal_independent_sets,
    independence_number,
    independent_domination_number,
    vt_reduce,
)
from .stability import (
    IndexReport,
    StabilityReport,
    brute_force_indices,
    is_stable_group,
    left_subset_indices,
    sfactor_check,
    subset_indices,
    translation_class_representatives,
)

__all__ = [
    "BudgetExceeded",
    "ElementSet",
    "FiniteGroup",
    "Graph",
    "GroupError",
    "IndexReport",
    "SolveBudget",
    "StabilityReport",
    "berge_lower_bound",
    "boundary_set",
    "brute_force_alpha_i",
    "brute_force_indices",
    "cayley_graph",
    "close_permutation_generators",
    "coset_partition",
    "element_order",
    "enumerate_maximal_independent_sets",
    "export_dot",
    "graph_components",
    "independence_number",
    "independent_domination_number",
    "is_stable_group",
    "left_subset_indices",
    "make_cyclic",
    "make_dihedral",
    "make_direct_product",
    "make_elementary_abelian",
    "make_semidirect",
    "sfactor_check",
    "subgroup_generated",
    "subset_indices",
    "translation_class_representatives",
    "validate_table",
    "vt_reduce",
]

__version__ = "0.1.0"

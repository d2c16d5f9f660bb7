"""Order bounds and improved-code redundancy for Arf numerical semigroups."""

from .arf import ASetReport, arf_closure, aset, is_arf, is_arf_via_full_definition, p_index
from .bounds import (
    CodeProfileRow,
    DimensionImprovement,
    OrderBoundProfile,
    breakpoints,
    code_profile,
    dimension_improvement,
    goppa_bound,
    is_stable,
    order_bound_arf,
    order_bound_bruteforce,
    r_card_arf,
    r_set,
    s_set,
    stability_violation,
)
from .semigroup import NumericalSemigroup, from_gaps, from_generators, from_small_elements
from .towers import (
    InductiveSpec,
    TowerParams,
    gs_tower_semigroup,
    inductive_semigroup,
    scaled_union,
    tower_breakpoints,
    tower_breakpoints_recursive,
    tower_conductor,
    tower_params,
    tower_pole,
)

__all__ = [
    "ASetReport",
    "CodeProfileRow",
    "DimensionImprovement",
    "InductiveSpec",
    "NumericalSemigroup",
    "OrderBoundProfile",
    "TowerParams",
    "arf_closure",
    "aset",
    "breakpoints",
    "code_profile",
    "dimension_improvement",
    "from_gaps",
    "from_generators",
    "from_small_elements",
    "goppa_bound",
    "gs_tower_semigroup",
    "inductive_semigroup",
    "is_arf",
    "is_arf_via_full_definition",
    "is_stable",
    "order_bound_arf",
    "order_bound_bruteforce",
    "p_index",
    "r_card_arf",
    "r_set",
    "s_set",
    "scaled_union",
    "stability_violation",
    "tower_breakpoints",
    "tower_breakpoints_recursive",
    "tower_conductor",
    "tower_params",
    "tower_pole",
]

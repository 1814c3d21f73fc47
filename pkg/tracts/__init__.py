"""
Tracts Module
Skew tracts and hyperfields with exact arithmetic, plus their property checkers
"""
from .core import (
    FormalSum, Region, FiniteRegion, Tract, TractValue,
    get_tract, group_op, hypersum_contains, is_null, regions_equal,
)
from .kernels import (
    D6, KRASNER, PHASE, SIGN, LayeredHyperfield, PhaseHyperfield, PrimeField, layer, roots_of_unity,
)
from .properties import (
    check_doubly_distributive, check_intersection_equalities, check_pathetic_cancellation,
    check_pp_multi, check_stringent, check_strong_pc, pathetic_violations,
)

__all__ = [
    "FormalSum", "Region", "FiniteRegion", "Tract", "TractValue",
    "get_tract", "group_op", "hypersum_contains", "is_null", "regions_equal",
    "D6", "KRASNER", "PHASE", "SIGN", "LayeredHyperfield", "PhaseHyperfield", "PrimeField",
    "layer", "roots_of_unity",
    "check_doubly_distributive", "check_intersection_equalities", "check_pathetic_cancellation",
    "check_pp_multi", "check_stringent", "check_strong_pc", "pathetic_violations",
]

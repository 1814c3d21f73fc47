"""
Matroids Module
Tract vectors, matroids over skew tracts, duality, quasi-Plücker coordinates and minors
"""
from .tvec import GroundSet, TVector, inner_product, orthogonality, scale, sum_contains, support
from .underlying import UnderlyingMatroid, UnionLattice, modular, modular_families
from .tmatroid import (
    TMatroid, canonical, check_circuit_axioms, coordinate_defect, eliminants, eliminate,
    modular_elimination_failures, proportional, times,
)
from .duality import dual
from .plucker import QuasiPlucker, check_qp_axioms, circuits_from_qp, cocircuits_from_qp, qp_from_circuits
from .minors import RescalingMap, contraction, deletion, induce_sigma, minor, qp_minor, rescale, rescale_cocircuits
from .realization import extension_sigma, matroid_from_vectors

__all__ = [
    "GroundSet", "TVector", "inner_product", "orthogonality", "scale", "sum_contains", "support",
    "UnderlyingMatroid", "UnionLattice", "modular", "modular_families",
    "TMatroid", "canonical", "check_circuit_axioms", "coordinate_defect", "eliminants", "eliminate",
    "modular_elimination_failures", "proportional", "times",
    "dual",
    "QuasiPlucker", "check_qp_axioms", "circuits_from_qp", "cocircuits_from_qp", "qp_from_circuits",
    "RescalingMap", "contraction", "deletion", "induce_sigma", "minor", "qp_minor", "rescale", "rescale_cocircuits",
    "extension_sigma", "matroid_from_vectors",
]

"""
Extensions Module
Localizations, single-element extensions and the rank 2 characterization
"""
from .localization import Localization, check_equivariance
from .extension import (
    ExtensionResult, elimination_defect, elimination_triples, extend, extended_bases, extended_cocircuits,
    extended_qp, find_elimination_triple, is_localization, mod_cocircuit, modular_triple_criterion,
    rank2_localization_test, scale_sigma, sigma_from_extension, verify_elimination_triple,
)
from .characterize import characterize, is_covered, rank2_contractions, rank2_minors3, run_jobs

__all__ = [
    "Localization", "check_equivariance",
    "ExtensionResult", "elimination_defect", "elimination_triples", "extend", "extended_bases",
    "extended_cocircuits", "extended_qp", "find_elimination_triple", "is_localization", "mod_cocircuit",
    "modular_triple_criterion", "rank2_localization_test", "scale_sigma", "sigma_from_extension",
    "verify_elimination_triple",
    "characterize", "is_covered", "rank2_contractions", "rank2_minors3", "run_jobs",
]

"""Shipped tract kernels; importing this package registers them"""
from .sign import SIGN, KRASNER, SignHyperfield, KrasnerHyperfield
from .gfp import PrimeField
from .d6 import D6, DihedralHyperfield
from .phase import PHASE, PhaseHyperfield, PhaseRegion, roots_of_unity
from .layered import LayeredHyperfield, LayeredRegion, layer

__all__ = [
    "SIGN", "KRASNER", "SignHyperfield", "KrasnerHyperfield",
    "PrimeField",
    "D6", "DihedralHyperfield",
    "PHASE", "PhaseHyperfield", "PhaseRegion", "roots_of_unity",
    "LayeredHyperfield", "LayeredRegion", "layer",
]

"""
Duality
Cocircuit values by two-element intersection propagation, verified against full orthogonality
"""
import logging
from typing import Dict, List

from errors import DualityError
from matroids.tmatroid import TMatroid, flip
from matroids.tvec import TVector, orthogonality
from tracts.core import TractValue

logger = logging.getLogger(__name__)


def _propagate(M: TMatroid, X: TVector, e: str, f: str, ye: TractValue) -> TractValue:
    """Y(f) forced by X(e)·conj(Y(e)) + X(f)·conj(Y(f)) being null"""
    eps = M.tract.epsilon
    if M.chirality == "left":
        return (X[f].inv() * eps * X[e]).conj() * ye
    return ye * (X[e] * eps * X[f].inv()).conj()


def dual(M: TMatroid) -> TMatroid:
    """
    The dual matroid, whose circuits are the cocircuits of M.
    Chirality flips; a missing or inconsistent value raises DualityError.
    """
    U = M.underlying
    tract = M.tract
    cocircuits: List[TVector] = []
    for D in U.cocircuit_supports():
        order = M.ground.ordered(D)
        e0 = order[0]
        values: Dict[str, TractValue] = {e0: tract.one}
        for f in order[1:]:
            for X in M.circuits:
                if X.support() & D == {e0, f}:
                    values[f] = _propagate(M, X, e0, f, tract.one)
                    break
            else:
                raise DualityError("no circuit meets the cocircuit support in exactly two elements",
                                   witness=("{" + ",".join(order) + "}", e0, f))
        cocircuits.append(TVector.from_mapping(M.ground, tract, values))

    for Y in cocircuits:
        for X in M.circuits:
            product, ok = orthogonality(X, Y, M.chirality)
            if not ok:
                raise DualityError("propagated cocircuit is not orthogonal to a circuit; input is not a matroid",
                                   witness=(X, Y, product))
    logger.debug("dual of %r has %d cocircuits", M, len(cocircuits))
    return TMatroid(M.ground, tract, flip(M.chirality), cocircuits)

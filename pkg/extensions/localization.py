"""
Localizations
Equivariant maps on cocircuits, stored on canonical representatives and completed on demand
"""
import logging
from typing import Dict, Iterable, Mapping, Tuple, Union

from errors import LocalizationError, ParseError
from matroids.tmatroid import TMatroid, canonical, flip
from matroids.tvec import TVector
from tracts.core import TractValue

logger = logging.getLogger(__name__)


class Localization:
    """
    σ on the cocircuits of a base matroid. For a left matroid the cocircuits
    are right-scaled and σ(Y·α) = σ(Y)·α; right matroids mirror this.
    """

    def __init__(self, base: TMatroid, values: Mapping[TVector, TractValue], p: str = "p"):
        self.base = base
        self.p = p
        self.values: Dict[TVector, TractValue] = dict(values)

    @property
    def side(self):
        """Scalar side of the cocircuits"""
        return flip(self.base.chirality)

    @property
    def tract(self):
        return self.base.tract

    def cocircuits(self) -> Tuple[TVector, ...]:
        return self.base.cocircuits

    def _split(self, Y: TVector) -> Tuple[TVector, TractValue]:
        """Y = canonical·α (left base) or α·canonical (right base)"""
        e0 = Y.first_support()
        if e0 is None:
            raise LocalizationError("the zero vector is not a cocircuit")
        Yc = canonical(Y, self.side)
        if Yc not in self.values:
            raise LocalizationError("vector is not a cocircuit of the base matroid", witness=(Y,))
        return Yc, Y[e0]

    def __call__(self, Y: TVector) -> TractValue:
        Yc, alpha = self._split(Y)
        if self.base.chirality == "left":
            return self.values[Yc] * alpha
        return alpha * self.values[Yc]

    def is_zero(self) -> bool:
        return all(v.is_zero for v in self.values.values())

    def scaled(self, alpha: TractValue) -> "Localization":
        """α·σ for a left base, σ·α for a right one"""
        if self.base.chirality == "left":
            return Localization(self.base, {Y: alpha * v for Y, v in self.values.items()}, self.p)
        return Localization(self.base, {Y: v * alpha for Y, v in self.values.items()}, self.p)

    def items(self) -> Iterable[Tuple[TVector, TractValue]]:
        for Y in self.cocircuits():
            yield Y, self.values[Y]

    def to_file(self) -> Dict:
        return {"p": self.p, "values": {Y.vector_id(): str(v) for Y, v in self.items()}}

    def __eq__(self, other) -> bool:
        return (isinstance(other, Localization) and self.base == other.base and self.p == other.p
                and self.values == other.values)

    def __hash__(self) -> int:
        return hash((self.base, self.p, tuple(sorted((Y.vector_id(), str(v)) for Y, v in self.values.items()))))

    def __repr__(self) -> str:
        body = ", ".join(f"{Y}↦{v}" for Y, v in self.items())
        return f"Localization({self.p}: {body})"


def check_equivariance(base: TMatroid, raw: Mapping[Union[str, TVector], Union[str, TractValue]],
                       p: str = "p", allow_zero: bool = False) -> Localization:
    """
    Validate a raw σ keyed by cocircuit vectors or vector ids, convert every key
    to its canonical representative by equivariance, and require one value per
    projective cocircuit.
    """
    if p in base.ground:
        raise LocalizationError(f"new element {p!r} already belongs to the ground set")
    tract = base.tract
    side = flip(base.chirality)
    known = set(base.cocircuits)
    values: Dict[TVector, TractValue] = {}
    for key, raw_value in raw.items():
        try:
            Y = key if isinstance(key, TVector) else TVector.from_id(base.ground, tract, key)
            value = raw_value if isinstance(raw_value, TractValue) else tract.value(str(raw_value))
        except ParseError as e:
            raise ParseError(e.message, position=f"values[{key!s}]")
        e0 = Y.first_support()
        if e0 is None:
            raise LocalizationError("σ key is the zero vector", witness=(str(key),))
        Yc = canonical(Y, side)
        if Yc not in known:
            raise LocalizationError("σ key is not a cocircuit of the base matroid", witness=(str(key),))
        alpha_inv = Y[e0].inv()
        canonical_value = value * alpha_inv if base.chirality == "left" else alpha_inv * value
        if Yc in values and values[Yc] != canonical_value:
            raise LocalizationError("σ assigns conflicting values to one projective cocircuit",
                                    witness=(str(Yc), str(values[Yc]), str(canonical_value)))
        values[Yc] = canonical_value
    missing = [Y for Y in base.cocircuits if Y not in values]
    if missing:
        raise LocalizationError("σ has no value for a cocircuit", witness=(str(missing[0]),))
    sigma = Localization(base, values, p)
    if sigma.is_zero() and not allow_zero:
        raise LocalizationError("σ vanishes on every cocircuit; the extension would be a loop")
    logger.debug("validated %r", sigma)
    return sigma

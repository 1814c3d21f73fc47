"""
Layered Hyperfields
The ℤ-layering R ⋊ ℤ of a stringent base hyperfield R ∈ {𝕂, 𝕊, GF(p)}
"""
import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from errors import ParseError, TractDomainError
from tracts.core import Region, Tract, TractValue, get_tract, register

_LAYERS = re.compile(r"^layers:(-?\d+)\.\.(-?\d+)$")
SUPPORTED_BASES = ("krasner", "sign", "gfp")


class LayeredRegion(Region):
    """Explicit points, every value strictly below a layer, and optionally zero"""

    def __init__(self, tract: "LayeredHyperfield", points: Iterable[TractValue] = (),
                 below: Optional[int] = None, zero: bool = False):
        self.tract = tract
        self.points = frozenset(points)
        self.below = below
        self.zero = zero

    def contains(self, z: TractValue) -> bool:
        if z.is_zero:
            return self.zero
        if z in self.points:
            return True
        return self.below is not None and z.payload[1] < self.below

    def is_singleton(self) -> bool:
        return self.below is None and len(self.points) + (1 if self.zero else 0) == 1

    def _nonempty_nonzero(self) -> bool:
        return bool(self.points) or self.below is not None

    def mul(self, other: Region) -> Region:
        assert isinstance(other, LayeredRegion)
        zero = (self.zero and (other.zero or other._nonempty_nonzero())) or (other.zero and self._nonempty_nonzero())
        points = [u * v for u in self.points for v in other.points]
        thresholds = []
        if self.below is not None:
            thresholds += [self.below + v.payload[1] for v in other.points]
        if other.below is not None:
            thresholds += [other.below + u.payload[1] for u in self.points]
        if self.below is not None and other.below is not None:
            thresholds.append(self.below + other.below - 1)
        return LayeredRegion(self.tract, points, max(thresholds) if thresholds else None, zero)

    def critical_points(self) -> List[TractValue]:
        values = sorted(self.points, key=lambda v: (v.payload[1], str(v)))
        if self.below is not None:
            values.append(self.tract.layer_value(self.tract.base.one, self.below))
        if self.zero:
            values.append(self.tract.zero)
        return values

    def __repr__(self) -> str:
        parts = ["0"] if self.zero else []
        parts += sorted(str(p) for p in self.points)
        if self.below is not None:
            parts.append(f"layer<{self.below}")
        return "{" + ", ".join(parts) + "}"


class LayeredHyperfield(Tract):
    """
    Payload (r, k) with r a nonzero base payload and k ∈ ℤ the layer.
    Values in a higher layer absorb lower ones; within one layer the base
    hypersum applies, and when it contains 0 every lower layer joins in.
    """
    kind = "layered"

    def __init__(self, base: Tract):
        if base.kind not in SUPPORTED_BASES:
            raise TractDomainError(f"layering supports {', '.join(SUPPORTED_BASES)}, not {base.name}")
        self.base = base

    @property
    def key(self):
        return (self.kind, self.base.key)

    @property
    def name(self) -> str:
        return f"{self.base.name}⋊Z"

    def layer_value(self, r: TractValue, k: int) -> TractValue:
        return TractValue(self, (r.payload, k))

    def _one(self):
        return (self.base._one(), 0)

    def _epsilon(self):
        return (self.base._epsilon(), 0)

    def _mul(self, p, q):
        return (self.base._mul(p[0], q[0]), p[1] + q[1])

    def _inv(self, p):
        return (self.base._inv(p[0]), -p[1])

    def _is_null(self, payloads: List[Tuple]) -> bool:
        top = max(k for _, k in payloads)
        return self.base._is_null([r for r, k in payloads if k == top])

    def _format(self, p) -> str:
        return f"({self.base._format(p[0])},{p[1]})"

    def _parse(self, text: str):
        text = text.replace("−", "-")
        if not (text.startswith("(") and text.endswith(")")) or "," not in text:
            raise ParseError(f"invalid layered value {text!r}; expected (r,k)")
        inner = text[1:-1]
        r_text, k_text = inner.rsplit(",", 1)
        r = self.base.value(r_text)
        if r.is_zero:
            raise ParseError(f"layered value {text!r} has a zero base part")
        try:
            k = int(k_text)
        except ValueError:
            raise ParseError(f"invalid layer in {text!r}")
        return (r.payload, k)

    def binary_sum(self, x: TractValue, y: TractValue) -> Region:
        if x.is_zero and y.is_zero:
            return LayeredRegion(self, zero=True)
        if x.is_zero or y.is_zero:
            return LayeredRegion(self, [y if x.is_zero else x])
        (r, k), (s, m) = x.payload, y.payload
        if k != m:
            return LayeredRegion(self, [x if k > m else y])
        base_sum = self.base.binary_sum(TractValue(self.base, r), TractValue(self.base, s))
        points = [self.layer_value(u, k) for u in self.base.carrier() if base_sum.contains(u)]
        if base_sum.contains(self.base.zero):
            return LayeredRegion(self, points, below=k, zero=True)
        return LayeredRegion(self, points)

    def candidates(self, points: Sequence[TractValue]) -> List[TractValue]:
        layers = sorted({v.payload[1] for v in points if not v.is_zero} or {0})
        window = range(layers[0] - 1, layers[-1] + 2)
        return [self.layer_value(r, k) for k in window for r in self.base.carrier()] + [self.zero]

    def _parse_sample_spec(self, spec: str) -> Optional[List[TractValue]]:
        match = _LAYERS.match(spec)
        if not match:
            return None
        lo, hi = int(match.group(1)), int(match.group(2))
        if lo > hi:
            raise ParseError(f"empty layer window {spec!r}", position="--sample")
        return [self.layer_value(r, k) for k in range(lo, hi + 1) for r in self.base.carrier()]

    def descriptor(self) -> Dict:
        described = {"kind": self.kind, "base": self.base.kind}
        if self.base.kind == "gfp":
            described["p"] = self.base.p
        return described


def layer(base: Tract, layer_group: str = "Z") -> LayeredHyperfield:
    """Layer a base hyperfield along ℤ with its standard order"""
    if layer_group not in ("Z", "ℤ"):
        raise TractDomainError(f"only the integer layer group is supported, got {layer_group!r}")
    return LayeredHyperfield(base)


def _build(descriptor: Dict) -> LayeredHyperfield:
    base_kind = descriptor.get("base")
    if base_kind is None:
        raise ParseError("layered descriptor needs base", position="tract.base")
    base_descriptor = {"kind": base_kind}
    if "p" in descriptor:
        base_descriptor["p"] = descriptor["p"]
    return layer(get_tract(base_descriptor), descriptor.get("group", "Z"))


register("layered")(_build)

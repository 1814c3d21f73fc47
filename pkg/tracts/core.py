"""
Tract Core
Skew tract values, formal sums, the null-sum predicate and hypersum membership
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from errors import ParseError, TractDomainError, TractMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TractValue:
    """
    An element of T = G ∪ {0} tagged by its tract instance.
    payload None is the zero element; any other payload is a group element.
    """
    tract: "Tract"
    payload: Hashable = None

    @property
    def is_zero(self) -> bool:
        return self.payload is None

    def _check(self, other: "TractValue") -> None:
        if not isinstance(other, TractValue) or other.tract != self.tract:
            raise TractMismatchError(f"cannot combine values of {self.tract.name} and {getattr(other, 'tract', other)}")

    def __mul__(self, other: "TractValue") -> "TractValue":
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.tract.zero
        return TractValue(self.tract, self.tract._mul(self.payload, other.payload))

    def __neg__(self) -> "TractValue":
        return self.tract.epsilon * self

    def inv(self) -> "TractValue":
        if self.is_zero:
            raise TractDomainError("zero has no inverse")
        return TractValue(self.tract, self.tract._inv(self.payload))

    def conj(self) -> "TractValue":
        if self.is_zero:
            return self
        return TractValue(self.tract, self.tract._conj(self.payload))

    def __str__(self) -> str:
        return "0" if self.is_zero else self.tract._format(self.payload)

    def __repr__(self) -> str:
        return f"{self.tract.name}:{self}"


class Region(ABC):
    """An exactly decidable subset of T, the result of a binary hypersum"""

    @abstractmethod
    def contains(self, z: TractValue) -> bool: ...

    @abstractmethod
    def is_singleton(self) -> bool: ...

    @abstractmethod
    def mul(self, other: "Region") -> "Region":
        """Setwise product {u·v : u ∈ self, v ∈ other}"""

    @abstractmethod
    def critical_points(self) -> List[TractValue]:
        """Values at which membership can change; used to build candidate sets"""


class FiniteRegion(Region):
    def __init__(self, tract: "Tract", values: Iterable[TractValue]):
        self.tract = tract
        self.values = frozenset(values)

    def contains(self, z: TractValue) -> bool:
        return z in self.values

    def is_singleton(self) -> bool:
        return len(self.values) == 1

    def mul(self, other: Region) -> Region:
        assert isinstance(other, FiniteRegion)
        return FiniteRegion(self.tract, (u * v for u in self.values for v in other.values))

    def critical_points(self) -> List[TractValue]:
        return sorted(self.values, key=str)

    def __repr__(self) -> str:
        return "{" + ", ".join(sorted(str(v) for v in self.values)) + "}"


class Tract(ABC):
    """
    A skew tract with exact arithmetic.
    Kernels implement the payload-level group law, the null-set predicate and
    the serialization; everything else is shared.
    """
    kind: str = ""
    involution: str = "identity"

    # --- kernel hooks ---------------------------------------------------

    @property
    def key(self) -> Tuple:
        return (self.kind,)

    @abstractmethod
    def _one(self) -> Hashable: ...

    @abstractmethod
    def _epsilon(self) -> Hashable: ...

    @abstractmethod
    def _mul(self, p: Hashable, q: Hashable) -> Hashable: ...

    @abstractmethod
    def _inv(self, p: Hashable) -> Hashable: ...

    def _conj(self, p: Hashable) -> Hashable:
        return p

    @abstractmethod
    def _is_null(self, payloads: List[Hashable]) -> bool: ...

    @abstractmethod
    def _format(self, p: Hashable) -> str: ...

    @abstractmethod
    def _parse(self, text: str) -> Hashable:
        """Payload for a nonzero serialized value; raise ParseError otherwise"""

    def _carrier(self) -> Optional[List[Hashable]]:
        """Nonzero payloads in canonical order, or None for infinite carriers"""
        return None

    def _parse_sample_spec(self, spec: str) -> Optional[List["TractValue"]]:
        return None

    # --- shared behaviour ------------------------------------------------

    @property
    def name(self) -> str:
        return self.kind

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Tract) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Tract({self.name})"

    @property
    def zero(self) -> TractValue:
        return TractValue(self, None)

    @property
    def one(self) -> TractValue:
        return TractValue(self, self._one())

    @property
    def epsilon(self) -> TractValue:
        return TractValue(self, self._epsilon())

    def value(self, text: str) -> TractValue:
        """Parse a serialized value"""
        text = text.strip()
        if text == "0":
            return self.zero
        return TractValue(self, self._parse(text))

    def carrier(self) -> Optional[List[TractValue]]:
        payloads = self._carrier()
        if payloads is None:
            return None
        return [TractValue(self, p) for p in payloads]

    def is_null(self, values: Iterable[TractValue]) -> bool:
        payloads = []
        for v in values:
            if v.tract != self:
                raise TractMismatchError(f"value {v!r} does not belong to {self.name}")
            if not v.is_zero:
                payloads.append(v.payload)
        if not payloads:
            return True
        return self._is_null(payloads)

    def binary_sum(self, x: TractValue, y: TractValue) -> Region:
        """x ⊞ y; finite carriers enumerate it by membership"""
        points = self.carrier()
        if points is None:
            raise NotImplementedError(f"{self.name} must provide binary_sum")
        return FiniteRegion(self, (z for z in points + [self.zero] if hypersum_contains([x, y], z)))

    def candidates(self, points: Sequence[TractValue]) -> List[TractValue]:
        """
        A finite set of values on which two regions built from the given
        critical points agree iff they are equal.
        """
        carrier = self.carrier()
        if carrier is None:
            raise NotImplementedError(f"{self.name} must provide candidates")
        return carrier + [self.zero]

    def sample(self, spec: Optional[str] = None) -> List[TractValue]:
        """
        Finite nonzero sample, closed under negation.
        spec: None/"full" for finite carriers, a kernel-specific spec such as
        "roots:24", or an explicit ";"-separated list of values.
        """
        if spec is None or spec == "full":
            values = self.carrier()
            if values is None:
                raise ParseError(f"{self.name} has an infinite carrier; give an explicit sample", position="--sample")
        else:
            values = self._parse_sample_spec(spec)
            if values is None:
                values = [self.value(part) for part in spec.split(";") if part.strip()]
        return close_under_negation([v for v in values if not v.is_zero])

    def descriptor(self) -> Dict[str, Any]:
        return {"kind": self.kind}


def close_under_negation(values: Sequence[TractValue]) -> List[TractValue]:
    """Keep order, append missing negatives at the end"""
    seen = list(dict.fromkeys(values))
    present = set(seen)
    for v in list(seen):
        if -v not in present:
            seen.append(-v)
            present.add(-v)
    return seen


class FormalSum:
    """A finite multiset of nonzero values of one tract, an element of ℕ[G]"""

    def __init__(self, terms: Iterable[TractValue] = (), tract: Optional[Tract] = None):
        kept = tuple(t for t in terms if not t.is_zero)
        for t in kept:
            if tract is None:
                tract = t.tract
            elif t.tract != tract:
                raise TractMismatchError(f"formal sum mixes {tract.name} and {t.tract.name}")
        self.tract = tract
        self.terms = kept

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(self.terms + other.terms, self.tract or other.tract)

    def left(self, alpha: TractValue) -> "FormalSum":
        return FormalSum((alpha * t for t in self.terms), self.tract)

    def right(self, alpha: TractValue) -> "FormalSum":
        return FormalSum((t * alpha for t in self.terms), self.tract)

    def is_null(self) -> bool:
        return is_null(self)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return sorted(map(str, self.terms)) == sorted(map(str, other.terms))

    def __hash__(self) -> int:
        return hash(tuple(sorted(map(str, self.terms))))

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms) if self.terms else "∅"

    def __repr__(self) -> str:
        return f"FormalSum({self})"


def group_op(kind: str, x: TractValue, y: Optional[TractValue] = None) -> TractValue:
    if kind == "mul":
        if y is None:
            raise TractDomainError("mul needs two operands")
        return x * y
    if kind == "inv":
        return x.inv()
    if kind == "neg":
        return -x
    if kind == "involute":
        return x.conj()
    raise TractDomainError(f"unknown group operation {kind!r}")


def is_null(s: Iterable[TractValue]) -> bool:
    """True iff the formal sum lies in the null set N_G; the empty sum is null"""
    if isinstance(s, FormalSum):
        if s.tract is None:
            return True
        return s.tract.is_null(s.terms)
    values = [v for v in s if not v.is_zero]
    if not values:
        return True
    return values[0].tract.is_null(values)


def hypersum_contains(elements: Sequence[TractValue], z: TractValue) -> bool:
    """z ∈ ⊞ elements, by reversibility of the iterated hypersum"""
    if z.is_zero:
        return is_null(elements)
    return is_null(list(elements) + [-z])


def regions_equal(tract: Tract, left: Region, right: Region, extra: Sequence[TractValue] = ()) -> Optional[TractValue]:
    """None when the regions agree everywhere, else the first separating value"""
    points = list(left.critical_points()) + list(right.critical_points()) + list(extra)
    for z in tract.candidates(points):
        if left.contains(z) != right.contains(z):
            return z
    return None


_REGISTRY: Dict[str, Any] = {}


def register(kind: str):
    def wrap(factory):
        _REGISTRY[kind] = factory
        return factory
    return wrap


def get_tract(descriptor: Dict[str, Any]) -> Tract:
    """Build a tract from its JSON descriptor, e.g. {"kind": "gfp", "p": 5}"""
    kind = descriptor.get("kind")
    if kind not in _REGISTRY:
        raise ParseError(f"unknown tract kind {kind!r}", position="tract.kind")
    logger.debug("building tract %s", descriptor)
    return _REGISTRY[kind](descriptor)

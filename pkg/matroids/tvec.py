"""
Tract Vectors
Vectors in T^E over an ordered ground set: supports, scalar actions, hypersums and orthogonality
"""
from typing import Dict, Iterable, Iterator, Literal, Mapping, Optional, Sequence, Tuple

from errors import ParseError, TractDomainError, TractMismatchError
from tracts.core import FormalSum, Tract, TractValue, is_null

Side = Literal["left", "right"]


class GroundSet:
    """Ordered, duplicate-free element labels; order drives canonical forms and witness order"""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise ParseError("ground set must be non-empty", position="ground")
        if len(set(labels)) != len(labels):
            raise ParseError("ground labels must be unique", position="ground")
        self.labels = labels
        self._index = {label: i for i, label in enumerate(labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ParseError(f"unknown ground element {label!r}")

    def ordered(self, labels: Iterable[str]) -> Tuple[str, ...]:
        return tuple(sorted(labels, key=self.index))

    def without(self, labels: Iterable[str]) -> "GroundSet":
        dropped = set(labels)
        return GroundSet(label for label in self.labels if label not in dropped)

    def with_element(self, label: str) -> "GroundSet":
        if label in self._index:
            raise ParseError(f"element {label!r} is already in the ground set")
        return GroundSet(self.labels + (label,))


class TVector:
    """A total map ground label -> TractValue, stored densely in ground order"""

    __slots__ = ("ground", "tract", "entries")

    def __init__(self, ground: GroundSet, tract: Tract, entries: Sequence[TractValue]):
        entries = tuple(entries)
        if len(entries) != len(ground):
            raise ParseError(f"vector has {len(entries)} entries for {len(ground)} ground elements")
        for v in entries:
            if v.tract != tract:
                raise TractMismatchError(f"entry {v!r} is not over {tract.name}")
        self.ground = ground
        self.tract = tract
        self.entries = entries

    @classmethod
    def from_mapping(cls, ground: GroundSet, tract: Tract, values: Mapping[str, object]) -> "TVector":
        unknown = set(values) - set(ground.labels)
        if unknown:
            raise ParseError(f"vector names unknown elements {sorted(unknown)}")
        entries = []
        for label in ground:
            raw = values.get(label, "0")
            entries.append(raw if isinstance(raw, TractValue) else tract.value(str(raw)))
        return cls(ground, tract, entries)

    @classmethod
    def from_id(cls, ground: GroundSet, tract: Tract, vector_id: str) -> "TVector":
        parts = vector_id.split(";")
        if len(parts) != len(ground):
            raise ParseError(f"vector id {vector_id!r} has {len(parts)} entries, expected {len(ground)}")
        return cls(ground, tract, [tract.value(part) for part in parts])

    @classmethod
    def zero(cls, ground: GroundSet, tract: Tract) -> "TVector":
        return cls(ground, tract, [tract.zero] * len(ground))

    def __getitem__(self, label: str) -> TractValue:
        return self.entries[self.ground.index(label)]

    def items(self) -> Iterator[Tuple[str, TractValue]]:
        return zip(self.ground.labels, self.entries)

    def support(self) -> frozenset:
        return frozenset(label for label, v in self.items() if not v.is_zero)

    def zero_set(self) -> frozenset:
        return frozenset(label for label, v in self.items() if v.is_zero)

    def first_support(self) -> Optional[str]:
        for label, v in self.items():
            if not v.is_zero:
                return label
        return None

    def scale(self, alpha: TractValue, side: Side = "left") -> "TVector":
        if alpha.is_zero:
            raise TractDomainError("scaling by zero is not a scalar action")
        if side == "left":
            return TVector(self.ground, self.tract, [alpha * v for v in self.entries])
        return TVector(self.ground, self.tract, [v * alpha for v in self.entries])

    def __neg__(self) -> "TVector":
        return TVector(self.ground, self.tract, [-v for v in self.entries])

    def restrict(self, ground: GroundSet) -> "TVector":
        """Drop coordinates outside the given sub-ground set"""
        return TVector(ground, self.tract, [self[label] for label in ground])

    def extend(self, ground: GroundSet, fill: Optional[Mapping[str, TractValue]] = None) -> "TVector":
        """Embed into a larger ground set; new coordinates default to zero"""
        fill = fill or {}
        entries = []
        for label in ground:
            if label in self.ground:
                entries.append(self[label])
            else:
                entries.append(fill.get(label, self.tract.zero))
        return TVector(ground, self.tract, entries)

    def vector_id(self) -> str:
        return ";".join(str(v) for v in self.entries)

    def to_dict(self) -> Dict[str, str]:
        return {label: str(v) for label, v in self.items()}

    def sort_key(self) -> Tuple:
        return (tuple(sorted(self.ground.index(e) for e in self.support())), tuple(str(v) for v in self.entries))

    def __eq__(self, other) -> bool:
        return isinstance(other, TVector) and self.ground == other.ground and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.ground, self.entries))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.entries) + ")"

    def __repr__(self) -> str:
        return f"TVector{self}"


def support(X: TVector) -> Tuple[frozenset, frozenset]:
    return X.support(), X.zero_set()


def scale(X: TVector, alpha: TractValue, side: Side = "left") -> TVector:
    return X.scale(alpha, side)


def sum_contains(X: TVector, Y: TVector, Z: TVector) -> bool:
    """Z ∈ X + Y: X(e) + Y(e) - Z(e) is null at every coordinate"""
    if not (X.ground == Y.ground == Z.ground):
        raise TractMismatchError("vectors live on different ground sets")
    return all(is_null([x, y, -z]) for x, y, z in zip(X.entries, Y.entries, Z.entries))


def inner_product(X: TVector, Y: TVector, chirality: Side = "left") -> FormalSum:
    """Σ X(e)·conj(Y(e)); right chirality multiplies in the opposite order"""
    if X.ground != Y.ground:
        raise TractMismatchError("vectors live on different ground sets")
    if chirality == "left":
        terms = (x * y.conj() for x, y in zip(X.entries, Y.entries))
    else:
        terms = (y.conj() * x for x, y in zip(X.entries, Y.entries))
    return FormalSum(terms, X.tract)


def orthogonality(X: TVector, Y: TVector, chirality: Side = "left") -> Tuple[FormalSum, bool]:
    product = inner_product(X, Y, chirality)
    return product, is_null(product)

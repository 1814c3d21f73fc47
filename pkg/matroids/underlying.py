"""
Underlying Matroid
Classical matroid on the supports: rank and closure oracles, bases, hyperplanes and the union lattice
"""
import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from errors import UnderlyingMatroidError
from matroids.tvec import GroundSet

logger = logging.getLogger(__name__)

Support = FrozenSet[str]


class UnderlyingMatroid:
    """
    Matroid given by its circuit supports.
    Independence means containing no circuit; rank is computed greedily in
    ground order and memoized.
    """

    def __init__(self, ground: GroundSet, circuits: Iterable[Iterable[str]], validate: bool = True):
        self.ground = ground
        self.circuits: Tuple[Support, ...] = tuple(sorted(
            {frozenset(c) for c in circuits}, key=lambda c: (len(c), ground.ordered(c))))
        self._rank_cache: Dict[Support, int] = {}
        self._bases: Optional[Tuple[Support, ...]] = None
        self._hyperplanes: Optional[Tuple[Support, ...]] = None
        if validate:
            valid, problem = self.validate()
            if not valid:
                raise UnderlyingMatroidError(problem[0], witness=problem[1])

    def validate(self) -> Tuple[bool, Optional[Tuple[str, Tuple]]]:
        """Check the classical circuit axioms; returns (ok, (message, witness))"""
        for c in self.circuits:
            if not c:
                return False, ("empty circuit support", ())
            if not c <= set(self.ground.labels):
                return False, ("circuit support leaves the ground set", (sorted(c),))
        for c1, c2 in combinations(self.circuits, 2):
            if c1 <= c2 or c2 <= c1:
                return False, ("comparable circuit supports", (self._fmt(c1), self._fmt(c2)))
            for e in self.ground.ordered(c1 & c2):
                pool = (c1 | c2) - {e}
                if not any(c3 <= pool for c3 in self.circuits):
                    return False, ("circuit elimination fails", (self._fmt(c1), self._fmt(c2), e))
        return True, None

    def _fmt(self, s: Iterable[str]) -> str:
        return "{" + ",".join(self.ground.ordered(s)) + "}"

    def is_independent(self, s: Iterable[str]) -> bool:
        s = frozenset(s)
        return not any(c <= s for c in self.circuits)

    def max_independent_subset(self, s: Iterable[str], reverse: bool = False) -> Support:
        """Greedy maximal independent subset, scanning in ground order (or reversed)"""
        chosen: List[str] = []
        order = self.ground.ordered(s)
        for e in (reversed(order) if reverse else order):
            if self.is_independent(chosen + [e]):
                chosen.append(e)
        return frozenset(chosen)

    def rank(self, s: Optional[Iterable[str]] = None) -> int:
        key = frozenset(self.ground.labels if s is None else s)
        if key not in self._rank_cache:
            self._rank_cache[key] = len(self.max_independent_subset(key))
        return self._rank_cache[key]

    @property
    def full_rank(self) -> int:
        return self.rank()

    def closure(self, s: Iterable[str]) -> Support:
        s = frozenset(s)
        r = self.rank(s)
        return s | frozenset(e for e in self.ground if e not in s and self.rank(s | {e}) == r)

    def is_loop(self, e: str) -> bool:
        return self.rank([e]) == 0

    def is_coloop(self, e: str) -> bool:
        return self.rank(set(self.ground.labels) - {e}) < self.full_rank

    def bases(self) -> Tuple[Support, ...]:
        if self._bases is None:
            d = self.full_rank
            self._bases = tuple(frozenset(b) for b in combinations(self.ground.labels, d)
                                if self.is_independent(b))
        return self._bases

    def is_basis(self, s: Iterable[str]) -> bool:
        s = frozenset(s)
        return len(s) == self.full_rank and self.is_independent(s)

    def independent_sets(self, size: int) -> Iterator[Support]:
        for s in combinations(self.ground.labels, size):
            if self.is_independent(s):
                yield frozenset(s)

    def flats_of_rank(self, k: int) -> Tuple[Support, ...]:
        """Closures of independent k-sets, deduplicated, in discovery order"""
        seen: Dict[Support, None] = {}
        for s in self.independent_sets(k):
            seen.setdefault(self.closure(s), None)
        return tuple(seen)

    def hyperplanes(self) -> Tuple[Support, ...]:
        if self._hyperplanes is None:
            d = self.full_rank
            self._hyperplanes = self.flats_of_rank(d - 1) if d > 0 else ()
        return self._hyperplanes

    def cocircuit_supports(self) -> Tuple[Support, ...]:
        everything = frozenset(self.ground.labels)
        return tuple(everything - h for h in self.hyperplanes())

    def dual(self) -> "UnderlyingMatroid":
        return UnderlyingMatroid(self.ground, self.cocircuit_supports(), validate=False)

    def __repr__(self) -> str:
        return f"UnderlyingMatroid(rank={self.full_rank}, circuits={[self._fmt(c) for c in self.circuits]})"


class UnionLattice:
    """
    The lattice of unions of a support family ordered by inclusion.
    Height is the length of a longest chain from the empty union.
    """

    def __init__(self, supports: Iterable[Iterable[str]]):
        self.supports = tuple(frozenset(s) for s in supports)
        self._height: Dict[Support, int] = {}

    def join(self, family: Iterable[Iterable[str]]) -> Support:
        out: FrozenSet[str] = frozenset()
        for s in family:
            out |= frozenset(s)
        return out

    def elements_below(self, top: Support) -> List[Support]:
        atoms = [s for s in self.supports if s <= top]
        found = {frozenset()}
        frontier = [frozenset()]
        while frontier:
            nxt = []
            for u in frontier:
                for a in atoms:
                    w = u | a
                    if w not in found:
                        found.add(w)
                        nxt.append(w)
            frontier = nxt
        return sorted(found, key=len)

    def height(self, element: Iterable[str]) -> int:
        top = frozenset(element)
        if top not in self._height:
            below = self.elements_below(top)
            if top not in below:
                raise ValueError("not an element of the union lattice")
            heights: Dict[Support, int] = {}
            for u in below:
                heights[u] = max((heights[w] + 1 for w in heights if w < u), default=0)
            self._height.update(heights)
        return self._height[top]


def modular(supports: Sequence[Iterable[str]], family: Sequence[Iterable[str]],
            lattice: Optional[UnionLattice] = None,
            cocircuits_of: Optional[UnderlyingMatroid] = None) -> bool:
    """
    True iff the join of the family has height |family| in the union lattice.
    When the supports are the cocircuit supports of a matroid, pairs are
    cross-checked against r(E ∖ (Y1 ∪ Y2)) = r(E) - 2.
    """
    lattice = lattice or UnionLattice(supports)
    members = [frozenset(f) for f in family]
    if len(set(members)) != len(members) or any(not m for m in members):
        return False
    verdict = lattice.height(lattice.join(members)) == len(members)
    if cocircuits_of is not None and len(members) == 2:
        rest = set(cocircuits_of.ground.labels) - (members[0] | members[1])
        shortcut = cocircuits_of.rank(rest) == cocircuits_of.full_rank - 2
        if shortcut != verdict:
            raise UnderlyingMatroidError("union-lattice height and rank criterion disagree on a cocircuit pair",
                                         witness=(sorted(members[0]), sorted(members[1])))
    return verdict


def modular_families(supports: Sequence[Iterable[str]], size: int,
                     lattice: Optional[UnionLattice] = None) -> Iterator[Tuple[Support, ...]]:
    lattice = lattice or UnionLattice(supports)
    members = [frozenset(s) for s in supports]
    for family in combinations(members, size):
        if lattice.height(lattice.join(family)) == size:
            yield family

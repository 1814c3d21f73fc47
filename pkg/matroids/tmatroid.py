"""
Matroids over Skew Tracts
Canonical projective circuit sets, modular elimination and the circuit axiom checker
"""
import logging
import os
from functools import cached_property
from itertools import combinations, product
from typing import Dict, Iterable, Iterator, List, Literal, Optional, Sequence, Tuple

from errors import EliminationPreconditionError, ParseError
from matroids.tvec import GroundSet, Side, TVector
from matroids.underlying import UnderlyingMatroid, UnionLattice, modular, modular_families
from models import AxiomReport, AxiomResult
from tracts.core import Tract, TractValue, get_tract, is_null

logger = logging.getLogger(__name__)

Mode = Literal["weak", "strong"]


def flip(chirality: Side) -> Side:
    return "right" if chirality == "left" else "left"


def times(chirality: Side, *factors: TractValue) -> TractValue:
    """Product in the written order for left data, reversed for right data"""
    ordered = factors if chirality == "left" else tuple(reversed(factors))
    out = ordered[0]
    for f in ordered[1:]:
        out = out * f
    return out


def canonical(X: TVector, chirality: Side) -> TVector:
    """Scale so the entry at the least support element is 1; the zero vector is returned as is"""
    e0 = X.first_support()
    if e0 is None:
        return X
    return X.scale(X[e0].inv(), chirality)


def proportional(X: TVector, Y: TVector, chirality: Side) -> bool:
    return X.support() == Y.support() and canonical(X, chirality) == canonical(Y, chirality)


class TMatroid:
    """
    A left or right matroid over a skew tract, stored as one canonical
    representative per projective circuit. Left matroids are closed under
    α·X, right matroids under X·α.
    """

    def __init__(self, ground: GroundSet, tract: Tract, chirality: Side, circuits: Iterable[TVector]):
        if chirality not in ("left", "right"):
            raise ParseError(f"chirality must be left or right, got {chirality!r}", position="chirality")
        self.ground = ground
        self.tract = tract
        self.chirality = chirality
        reps = {canonical(X, chirality) for X in circuits}
        for X in reps:
            if X.ground != ground or X.tract != tract:
                raise ParseError("circuit does not live on the matroid's ground set and tract")
        self.circuits: Tuple[TVector, ...] = tuple(sorted(reps, key=TVector.sort_key))

    @classmethod
    def from_model(cls, model) -> "TMatroid":
        tract = get_tract(model.tract.as_descriptor())
        ground = GroundSet(model.ground)
        circuits = []
        for i, values in enumerate(model.circuits):
            try:
                circuits.append(TVector.from_mapping(ground, tract, values))
            except ParseError as e:
                raise ParseError(e.message, position=f"circuits[{i}]")
        return cls(ground, tract, model.chirality, circuits)

    def to_dict(self) -> Dict:
        return {
            "tract": self.tract.descriptor(),
            "chirality": self.chirality,
            "ground": list(self.ground.labels),
            "circuits": [X.to_dict() for X in self.circuits],
        }

    def vector(self, values: Dict[str, object]) -> TVector:
        return TVector.from_mapping(self.ground, self.tract, values)

    def canonical(self, X: TVector) -> TVector:
        return canonical(X, self.chirality)

    def scale(self, X: TVector, alpha: TractValue) -> TVector:
        return X.scale(alpha, self.chirality)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TMatroid) and self.ground == other.ground and self.tract == other.tract
                and self.chirality == other.chirality and self.circuits == other.circuits)

    def __hash__(self) -> int:
        return hash((self.ground, self.tract, self.chirality, self.circuits))

    def __repr__(self) -> str:
        return f"TMatroid({self.chirality}, {self.tract.name}, {list(self.ground.labels)}, {len(self.circuits)} circuits)"

    @cached_property
    def underlying(self) -> UnderlyingMatroid:
        return UnderlyingMatroid(self.ground, (X.support() for X in self.circuits))

    @property
    def rank(self) -> int:
        return self.underlying.full_rank

    @cached_property
    def lattice(self) -> UnionLattice:
        return UnionLattice(X.support() for X in self.circuits)

    @cached_property
    def dual(self) -> "TMatroid":
        from matroids.duality import dual
        return dual(self)

    @property
    def cocircuits(self) -> Tuple[TVector, ...]:
        return self.dual.circuits

    @cached_property
    def _by_support(self) -> Dict[frozenset, TVector]:
        return {X.support(): X for X in self.circuits}

    def circuit_with_support(self, support: Iterable[str]) -> Optional[TVector]:
        return self._by_support.get(frozenset(support))

    def cocircuit_with_support(self, support: Iterable[str]) -> Optional[TVector]:
        return self.dual.circuit_with_support(support)

    def is_circuit(self, X: TVector) -> bool:
        return self.circuit_with_support(X.support()) == self.canonical(X)

    def is_modular_pair(self, X: TVector, Y: TVector) -> bool:
        return modular([c.support() for c in self.circuits], [X.support(), Y.support()], self.lattice)


def _elimination_scale(X: TVector, Y: TVector, e: str, chirality: Side) -> TVector:
    """Rescale Y so that X(e) = -Y(e)"""
    if chirality == "left":
        beta = -(X[e] * Y[e].inv())
    else:
        beta = -(Y[e].inv() * X[e])
    return Y.scale(beta, chirality)


def _forced_multiple(C: TVector, W: TVector, f: str, chirality: Side) -> Optional[TVector]:
    """The multiple αC with αC(f) = W(f), or None if C(f) = 0"""
    if C[f].is_zero:
        return None
    alpha = W[f] * C[f].inv() if chirality == "left" else C[f].inv() * W[f]
    return C.scale(alpha, chirality)


def coordinate_defect(vectors: Sequence[TVector], Z: TVector) -> Optional[Tuple[str, List[TractValue]]]:
    """First coordinate f where Σ V(f) - Z(f) is not null, with its terms"""
    for f in Z.ground:
        terms = [V[f] for V in vectors] + [-Z[f]]
        if not is_null(terms):
            return f, [t for t in terms if not t.is_zero]
    return None


def eliminants(circuits: Sequence[TVector], X: TVector, Y: TVector, e: str, chirality: Side) -> Iterator[TVector]:
    """
    Every multiple αC of a listed circuit with C(e) = 0 and X(f) + Y(f) - αC(f)
    null for all f. Assumes X(e) = -Y(e) ≠ 0; α is forced on X △ Y.
    """
    sx, sy = X.support(), Y.support()
    sym = X.ground.ordered(sx ^ sy)
    union = sx | sy
    if not sym:
        return
    for C in circuits:
        sc = C.support()
        if e in sc or not sc <= union - {e} or not set(sym) <= sc:
            continue
        W = X if sym[0] in sx else Y
        Z = _forced_multiple(C, W, sym[0], chirality)
        if Z is not None and coordinate_defect([X, Y], Z) is None:
            yield Z


def eliminate(M: TMatroid, X: TVector, Y: TVector, e: str) -> Optional[TVector]:
    """A circuit Z with Z(e) = 0 and Z ∈ X + Y, or None when the axiom fails"""
    if e not in M.ground:
        raise EliminationPreconditionError(f"{e!r} is not a ground element")
    if X[e].is_zero or X[e] != -Y[e]:
        raise EliminationPreconditionError("elimination needs X(e) = -Y(e) ≠ 0", witness=(X, Y, e))
    if not (M.is_circuit(X) and M.is_circuit(Y)):
        raise EliminationPreconditionError("X and Y must be circuits", witness=(X, Y))
    if proportional(X, Y, M.chirality):
        return None
    if not M.is_modular_pair(X, Y):
        raise EliminationPreconditionError("X and Y do not form a modular pair", witness=(X, Y))
    return next(eliminants(M.circuits, X, Y, e, M.chirality), None)


def _fmt_support(M: TMatroid, s: Iterable[str]) -> str:
    return "{" + ",".join(M.ground.ordered(s)) + "}"


def modular_elimination_failures(circuits: Sequence[TVector], chirality: Side,
                                 lattice: Optional[UnionLattice] = None) -> Iterator[Tuple[TVector, TVector, str]]:
    """
    Triples (X, Y, e) where weak modular elimination fails. X is canonical and
    Y is scaled so that X(e) = -Y(e).
    """
    supports = [X.support() for X in circuits]
    lattice = lattice or UnionLattice(supports)
    for X, Yc in combinations(circuits, 2):
        sx, sy = X.support(), Yc.support()
        if sx == sy or not modular(supports, [sx, sy], lattice):
            continue
        for e in X.ground.ordered(sx & sy):
            Y = _elimination_scale(X, Yc, e, chirality)
            if next(eliminants(circuits, X, Y, e, chirality), None) is None:
                yield X, Y, e


def _strong_failures(M: TMatroid, cap: int, notes: List[str]) -> Tuple[int, Optional[Tuple]]:
    checked = 0
    supports = [X.support() for X in M.circuits]
    by_support = {X.support(): X for X in M.circuits}
    top = min(cap, len(M.ground))
    if cap < len(M.ground) and len(M.circuits) > cap:
        notes.append(f"strong modular elimination checked on families of size at most {top}")
    for size in range(3, top + 1):
        for family in modular_families(supports, size, M.lattice):
            for pick in range(size):
                sx = family[pick]
                others = family[:pick] + family[pick + 1:]
                union_others = frozenset().union(*others)
                if sx <= union_others:
                    continue
                free = M.ground.ordered(sx - union_others)
                choices = []
                for i, si in enumerate(others):
                    rest = frozenset().union(*(s for j, s in enumerate(others) if j != i))
                    choices.append(M.ground.ordered((sx & si) - rest))
                if any(not c for c in choices):
                    continue
                X = by_support[sx]
                for es in product(*choices):
                    checked += 1
                    Xs = [_elimination_scale(X, by_support[si], e, M.chirality) for si, e in zip(others, es)]
                    found = False
                    for C in M.circuits:
                        if any(not C[e].is_zero for e in es):
                            continue
                        Z = _forced_multiple(C, X, free[0], M.chirality)
                        if Z is not None and coordinate_defect([X] + Xs, Z) is None:
                            found = True
                            break
                    if not found:
                        return checked, (X, tuple(Xs), es)
    return checked, None


def check_circuit_axioms(M: TMatroid, mode: Mode = "weak", family_cap: Optional[int] = None) -> AxiomReport:
    """
    C1-C3 on the canonical representatives, C4 on every modular pair and
    eliminable element, and in strong mode C4' on modular families.
    """
    report = AxiomReport(subject=repr(M), mode=mode)
    zero = [X for X in M.circuits if not X.support()]
    report.results.append(AxiomResult(
        axiom="C1", passed=not zero, checked=len(M.circuits),
        witness=[str(zero[0])] if zero else None, witness_objects=(zero[0],) if zero else None))
    report.results.append(AxiomResult(axiom="C2", passed=True, checked=len(M.circuits),
                                      detail="closed under scaling by construction"))
    comparable = None
    for X, Y in combinations([X for X in M.circuits if X.support()], 2):
        if X.support() <= Y.support() or Y.support() <= X.support():
            comparable = (X, Y)
            break
    report.results.append(AxiomResult(
        axiom="C3", passed=comparable is None, checked=len(M.circuits),
        witness=[str(v) for v in comparable] if comparable else None, witness_objects=comparable))
    if zero or comparable:
        report.notes.append("C4 skipped: representatives fail C1 or C3")
        return report

    failure = next(modular_elimination_failures(M.circuits, M.chirality, M.lattice), None)
    pairs = sum(1 for X, Y in combinations(M.circuits, 2) if M.is_modular_pair(X, Y))
    if failure:
        X, Y, e = failure
        result = AxiomResult(axiom="C4", passed=False, checked=pairs,
                             witness=[str(X), str(Y), e], witness_objects=failure,
                             detail=f"no circuit eliminates {e} between {_fmt_support(M, X.support())} and {_fmt_support(M, Y.support())}")
    else:
        result = AxiomResult(axiom="C4", passed=True, checked=pairs)
    report.results.append(result)

    if mode == "strong":
        cap = family_cap or int(os.getenv("TRACT_MATROIDS_FAMILY_CAP", "5"))
        checked, strong_failure = _strong_failures(M, cap, report.notes)
        if strong_failure:
            X, Xs, es = strong_failure
            report.results.append(AxiomResult(
                axiom="C4'", passed=False, checked=checked,
                witness=[str(X)] + [str(v) for v in Xs] + list(es), witness_objects=strong_failure))
        else:
            report.results.append(AxiomResult(axiom="C4'", passed=True, checked=checked))
    logger.debug("circuit axioms %s: %s", mode, "pass" if report.passed else "fail")
    return report

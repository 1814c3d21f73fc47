"""
Quasi-Plücker Coordinates
Values on adjacent basis pairs, dual pivoting to and from cocircuits, and the P1-P5 / P4'-P5' checker
"""
import logging
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

from errors import QuasiPluckerError
from matroids.tmatroid import Mode, TMatroid, times
from matroids.tvec import GroundSet, Side, TVector
from matroids.underlying import UnderlyingMatroid
from models import AxiomReport, AxiomResult
from tracts.core import Tract, TractValue, is_null

logger = logging.getLogger(__name__)

Basis = FrozenSet[str]
BasisPair = Tuple[Basis, Basis]


class QuasiPlucker:
    """
    Map from ordered pairs of adjacent bases to nonzero tract values.
    The basis family is held explicitly so extended families that are not yet
    known to be matroids can be checked too.
    """

    def __init__(self, ground: GroundSet, tract: Tract, chirality: Side, bases: Iterable[Iterable[str]],
                 values: Dict[BasisPair, TractValue]):
        self.ground = ground
        self.tract = tract
        self.chirality = chirality
        self.bases: Tuple[Basis, ...] = tuple(sorted({frozenset(b) for b in bases}, key=ground.ordered))
        self._basis_set = frozenset(self.bases)
        self.rank = len(self.bases[0]) if self.bases else 0
        self.values = dict(values)

    def is_basis(self, s: Iterable[str]) -> bool:
        return frozenset(s) in self._basis_set

    def __getitem__(self, pair: BasisPair) -> TractValue:
        key = (frozenset(pair[0]), frozenset(pair[1]))
        try:
            return self.values[key]
        except KeyError:
            raise QuasiPluckerError("no coordinate for this basis pair",
                                    witness=(self.fmt(key[0]), self.fmt(key[1])))

    def bracket(self, F: Iterable[str], a: str, b: str) -> TractValue:
        """[Fa, Fb]"""
        F = frozenset(F)
        return self[(F | {a}, F | {b})]

    def fmt(self, s: Iterable[str]) -> str:
        return "{" + ",".join(self.ground.ordered(s)) + "}"

    def underlying(self) -> UnderlyingMatroid:
        """Matroid with this basis family; circuits are minimal sets in no basis"""
        circuits = []
        for size in range(1, len(self.ground) + 1):
            for s in combinations(self.ground.labels, size):
                s = frozenset(s)
                if any(c <= s for c in circuits):
                    continue
                if not any(s <= B for B in self.bases):
                    circuits.append(s)
        return UnderlyingMatroid(self.ground, circuits, validate=False)

    def as_dict(self) -> List[Dict[str, str]]:
        return [{"from": self.fmt(B), "to": self.fmt(B2), "value": str(v)}
                for (B, B2), v in sorted(self.values.items(),
                                         key=lambda kv: (self.ground.ordered(kv[0][0]), self.ground.ordered(kv[0][1])))]

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuasiPlucker) and self.ground == other.ground and self.tract == other.tract
                and self.chirality == other.chirality and self._basis_set == other._basis_set
                and self.values == other.values)

    def __repr__(self) -> str:
        return f"QuasiPlucker({self.chirality}, {self.tract.name}, {len(self.bases)} bases)"


@lru_cache(maxsize=256)
def qp_from_circuits(M: TMatroid) -> QuasiPlucker:
    """
    Dual pivoting: [Fa, Fb] = conj(Y(a)·Y(b)^-1) with Y the cocircuit whose
    support is E ∖ cl(F); right matroids reverse the product.
    """
    U = M.underlying
    values: Dict[BasisPair, TractValue] = {}
    for B in U.bases():
        for a in B:
            F = B - {a}
            Y = M.cocircuit_with_support(set(M.ground.labels) - U.closure(F))
            if Y is None:
                raise QuasiPluckerError("missing cocircuit for a hyperplane", witness=(U._fmt(F),))
            for b in Y.support() - {a}:
                ratio = Y[a] * Y[b].inv() if M.chirality == "left" else Y[b].inv() * Y[a]
                values[(B, F | {b})] = ratio.conj()
    return QuasiPlucker(M.ground, M.tract, M.chirality, U.bases(), values)


def cocircuits_from_qp(Q: QuasiPlucker) -> List[TVector]:
    """
    Rebuild one cocircuit per hyperplane: Y(y0) = 1 and Y(y) = conj([Fy, Fy0])
    for any basis of the hyperplane F. Conflicting choices of F raise.
    """
    U = Q.underlying()
    d = Q.rank
    everything = frozenset(Q.ground.labels)
    found: Dict[FrozenSet[str], TVector] = {}
    for F in U.independent_sets(d - 1) if d > 0 else ():
        support = everything - U.closure(F)
        order = Q.ground.ordered(support)
        y0 = order[0]
        values = {y0: Q.tract.one}
        for y in order[1:]:
            values[y] = Q.bracket(F, y, y0).conj()
        Y = TVector.from_mapping(Q.ground, Q.tract, values)
        if support in found and found[support] != Y:
            raise QuasiPluckerError("quasi-Plücker values give two different cocircuits on one hyperplane",
                                    witness=(Q.fmt(everything - support), str(found[support]), str(Y)))
        found[support] = Y
    return [found[s] for s in sorted(found, key=Q.ground.ordered)]


def circuits_from_qp(Q: QuasiPlucker) -> TMatroid:
    """The matroid with these coordinates, via its cocircuits and duality"""
    from matroids.duality import dual
    cocircuits = TMatroid(Q.ground, Q.tract, "right" if Q.chirality == "left" else "left", cocircuits_from_qp(Q))
    return dual(cocircuits)


class _Check:
    def __init__(self, axiom: str):
        self.axiom = axiom
        self.checked = 0
        self.witness: Optional[Tuple] = None
        self.detail: Optional[str] = None

    def fail(self, witness: Tuple, detail: str) -> None:
        if self.witness is None:
            self.witness = witness
            self.detail = detail

    def result(self) -> AxiomResult:
        return AxiomResult(axiom=self.axiom, passed=self.witness is None, checked=self.checked,
                           witness=[str(w) for w in self.witness] if self.witness else None,
                           detail=self.detail, witness_objects=self.witness)


def _describe(Q: QuasiPlucker, F, *elements) -> Tuple:
    return (f"F={Q.fmt(F)}",) + tuple(elements)


def check_qp_axioms(Q: QuasiPlucker, mode: Mode = "weak", axioms: Optional[Iterable[str]] = None) -> AxiomReport:
    """
    Check P1-P5 (and P4', P5' in strong mode) over every qualifying basis
    configuration. Right chirality reverses all products.
    """
    wanted = set(axioms) if axioms is not None else {"P1", "P2", "P3", "P4", "P5"} | (
        {"P4'", "P5'"} if mode == "strong" else set())
    one = Q.tract.one
    minus_one = -one
    mul: Callable[..., TractValue] = lambda *xs: times(Q.chirality, *xs)
    B = Q.is_basis
    d = Q.rank
    labels = Q.ground.labels
    checks = {name: _Check(name) for name in ("P1", "P2", "P3", "P4", "P5", "P4'", "P5'")}

    if d >= 1:
        for F in combinations(labels, d - 1):
            F = frozenset(F)
            outside = [e for e in labels if e not in F and B(F | {e})]
            for a, b in permutations(outside, 2):
                if "P1" in wanted:
                    checks["P1"].checked += 1
                    v = mul(Q.bracket(F, a, b), Q.bracket(F, b, a))
                    if v != one:
                        checks["P1"].fail(_describe(Q, F, a, b), f"[Fa,Fb][Fb,Fa] = {v}")
            if "P3" in wanted:
                for a, b, c in permutations(outside, 3):
                    checks["P3"].checked += 1
                    v = mul(Q.bracket(F, a, b), Q.bracket(F, b, c), Q.bracket(F, c, a))
                    if v != one:
                        checks["P3"].fail(_describe(Q, F, a, b, c), f"[Fa,Fb][Fb,Fc][Fc,Fa] = {v}")

    if d >= 2:
        for F in combinations(labels, d - 2):
            F = frozenset(F)
            rest = [e for e in labels if e not in F]

            def Fx(*xs):
                return F | set(xs)

            if "P2" in wanted:
                for a, b, c in permutations(rest, 3):
                    if B(Fx(a, b)) and B(Fx(a, c)) and B(Fx(b, c)):
                        checks["P2"].checked += 1
                        v = mul(Q[(Fx(a, c), Fx(b, c))], Q[(Fx(a, b), Fx(a, c))], Q[(Fx(b, c), Fx(a, b))])
                        if v != minus_one:
                            checks["P2"].fail(_describe(Q, F, a, b, c), f"[Fac,Fbc][Fab,Fac][Fbc,Fab] = {v}")
            if "P4" in wanted or "P5" in wanted:
                for a, b, c, dd in permutations(rest, 4):
                    if not (B(Fx(a, c)) and B(Fx(a, dd)) and B(Fx(b, c)) and B(Fx(b, dd))):
                        continue
                    six = B(Fx(a, b)) and B(Fx(c, dd))
                    if "P4" in wanted and not six:
                        checks["P4"].checked += 1
                        left, right = Q[(Fx(a, c), Fx(b, c))], Q[(Fx(a, dd), Fx(b, dd))]
                        if left != right:
                            checks["P4"].fail(_describe(Q, F, a, b, c, dd), f"[Fac,Fbc] = {left} but [Fad,Fbd] = {right}")
                    if "P5" in wanted and six:
                        checks["P5"].checked += 1
                        terms = [minus_one,
                                 mul(Q[(Fx(b, dd), Fx(a, b))], Q[(Fx(a, c), Fx(c, dd))]),
                                 mul(Q[(Fx(a, dd), Fx(a, b))], Q[(Fx(b, c), Fx(c, dd))])]
                        if not is_null(terms):
                            checks["P5"].fail(_describe(Q, F, a, b, c, dd) + tuple(terms),
                                              "-1 + [Fbd,Fab][Fac,Fcd] + [Fad,Fab][Fbc,Fcd] = "
                                              + " + ".join(str(t) for t in terms) + " is not null")

    if wanted & {"P4'", "P5'"} and d >= 1:
        for I in combinations(labels, d + 1):
            I = frozenset(I)
            for J in combinations(labels, d - 1):
                J = frozenset(J)
                if len(I - J) < 3:
                    continue
                I1 = [x for x in Q.ground.ordered(I) if B(I - {x}) and x not in J and B(J | {x})]
                if len(I1) == 2 and "P4'" in wanted:
                    a, b = I1
                    checks["P4'"].checked += 1
                    left, right = Q[(I - {a}, I - {b})], Q[(J | {b}, J | {a})]
                    if left != right:
                        checks["P4'"].fail((f"I={Q.fmt(I)}", f"J={Q.fmt(J)}", a, b),
                                           f"[I-a,I-b] = {left} but [Jb,Ja] = {right}")
                if len(I1) >= 3 and "P5'" in wanted:
                    for z in I1:
                        checks["P5'"].checked += 1
                        terms = [minus_one] + [mul(Q[(I - {x}, I - {z})], Q[(J | {x}, J | {z})])
                                               for x in I1 if x != z]
                        if not is_null(terms):
                            checks["P5'"].fail((f"I={Q.fmt(I)}", f"J={Q.fmt(J)}", z) + tuple(terms),
                                               " + ".join(str(t) for t in terms) + " is not null")

    report = AxiomReport(subject=repr(Q), mode=mode)
    for name in ("P1", "P2", "P3", "P4", "P5", "P4'", "P5'"):
        if name in wanted:
            report.results.append(checks[name].result())
    return report

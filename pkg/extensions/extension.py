"""
Single-Element Extensions
Extended bases and quasi-Plücker coordinates, modular-elimination cocircuits, extension and recovery of σ
"""
import logging
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from errors import EliminationPreconditionError, ExtensionError, NotALocalizationError, TractMatroidError
from extensions.localization import Localization, check_equivariance
from matroids.minors import deletion
from matroids.plucker import BasisPair, QuasiPlucker, check_qp_axioms, qp_from_circuits
from matroids.tmatroid import (
    Mode, TMatroid, canonical, coordinate_defect, eliminants, modular_elimination_failures, times,
)
from matroids.tvec import GroundSet, TVector, sum_contains
from matroids.underlying import modular
from models import AxiomReport, AxiomResult
from tracts.core import FormalSum, TractValue, is_null

logger = logging.getLogger(__name__)

Basis = FrozenSet[str]


def _debug_enabled() -> bool:
    return os.getenv("TRACT_MATROIDS_DEBUG", "false").lower() == "true"


def extended_ground(sigma: Localization) -> GroundSet:
    return sigma.base.ground.with_element(sigma.p)


def _hyperplane_cocircuit(M: TMatroid, F) -> TVector:
    """The canonical cocircuit with support E ∖ cl(F)"""
    support = frozenset(M.ground.labels) - M.underlying.closure(F)
    Y = M.cocircuit_with_support(support)
    if Y is None:
        raise ExtensionError("no cocircuit for the hyperplane spanned by F", witness=(sorted(F),))
    return Y


def extended_bases(sigma: Localization) -> Tuple[Basis, ...]:
    """ℬ together with F ∪ p for every independent (d-1)-set F whose cocircuit has σ ≠ 0"""
    M = sigma.base
    U = M.underlying
    d = U.full_rank
    bases: List[Basis] = list(U.bases())
    if d >= 1:
        for F in U.independent_sets(d - 1):
            if not sigma(_hyperplane_cocircuit(M, F)).is_zero:
                bases.append(F | {sigma.p})
    return tuple(bases)


def _extended_value(sigma: Localization, base_values: QuasiPlucker, F: Basis, s: str, t: str) -> TractValue:
    M = sigma.base
    p = sigma.p
    mul = lambda *xs: times(M.chirality, *xs)
    if p not in F and p not in (s, t):
        return base_values.bracket(F, s, t)
    if s == p:
        Y = _hyperplane_cocircuit(M, F)
        return mul(sigma(Y), Y[t].inv()).conj()
    if t == p:
        Y = _hyperplane_cocircuit(M, F)
        return mul(Y[s], sigma(Y).inv()).conj()
    G = F - {p}
    if not base_values.is_basis(G | {s, t}):
        for g in M.ground:
            if g not in G | {s, t} and base_values.is_basis(G | {s, g}) and base_values.is_basis(G | {t, g}):
                return base_values.bracket(G | {g}, s, t)
        raise ExtensionError("no g completes both Gs and Gt to bases", witness=(sorted(G), s, t))
    Ys = _hyperplane_cocircuit(M, G | {s})
    Yt = _hyperplane_cocircuit(M, G | {t})
    return -mul(Yt[s], sigma(Yt).inv(), sigma(Ys), Ys[t].inv()).conj()


def extended_qp(sigma: Localization) -> QuasiPlucker:
    """
    [·]_p on adjacent pairs of the extended basis family. Pairs avoiding p keep
    their base value; the other cases are read off the cocircuits and σ, with
    products reversed for right matroids.
    """
    base_values = qp_from_circuits(sigma.base)
    bases = extended_bases(sigma)
    values: Dict[BasisPair, TractValue] = {}
    for B1 in bases:
        for B2 in bases:
            if len(B1 - B2) != 1:
                continue
            (s,), (t,) = tuple(B1 - B2), tuple(B2 - B1)
            values[(B1, B2)] = _extended_value(sigma, base_values, B1 & B2, s, t)
    logger.debug("extended coordinates on %d bases, %d pairs", len(bases), len(values))
    return QuasiPlucker(extended_ground(sigma), sigma.tract, sigma.base.chirality, bases, values)


def _basis_exchange(ground: GroundSet, bases: Tuple[Basis, ...]) -> AxiomResult:
    family = frozenset(bases)
    checked = 0
    for B1 in bases:
        for B2 in bases:
            for x in ground.ordered(B1 - B2):
                checked += 1
                if not any((B1 - {x}) | {y} in family for y in B2 - B1):
                    fmt = lambda s: "{" + ",".join(ground.ordered(s)) + "}"
                    return AxiomResult(axiom="B", passed=False, checked=checked,
                                       witness=[fmt(B1), fmt(B2), x], witness_objects=(B1, B2, x),
                                       detail=f"no element of {fmt(B2 - B1)} replaces {x}")
    return AxiomResult(axiom="B", passed=True, checked=checked)


def _lift(sigma: Localization, Y: TVector, ground: GroundSet) -> TVector:
    return Y.extend(ground, {sigma.p: sigma(Y)})


def mod_cocircuit(sigma: Localization, Y1: TVector, Y2: TVector, reverse_choice: bool = False) -> TVector:
    """
    The cocircuit of the extension eliminating p between the lifts of a modular
    pair with σ(Y1) = -σ(Y2) ≠ 0. Off the intersection it copies Y1 or Y2; on
    the intersection X(e) = -Y1(e)·σ(Y1)^-1·σ(Y_e)·Y_e(e1)^-1·Y2(e1).
    """
    M = sigma.base
    s1, s2 = sigma(Y1), sigma(Y2)
    if s1.is_zero or s1 != -s2:
        raise EliminationPreconditionError("Mod needs σ(Y1) = -σ(Y2) ≠ 0", witness=(Y1, Y2, s1, s2))
    supports = [Y.support() for Y in M.cocircuits]
    if Y1.support() == Y2.support() or not modular(supports, [Y1.support(), Y2.support()], M.dual.lattice,
                                                   cocircuits_of=M.underlying):
        raise EliminationPreconditionError("Y1 and Y2 do not form a modular pair of cocircuits", witness=(Y1, Y2))
    everything = frozenset(M.ground.labels)
    sup1, sup2 = Y1.support(), Y2.support()
    common_zero = everything - (sup1 | sup2)
    only2 = M.ground.ordered(sup2 - sup1)
    e1 = only2[-1] if reverse_choice else only2[0]
    mul = lambda *xs: times(M.chirality, *xs)
    values: Dict[str, TractValue] = {}
    for e in M.ground:
        if e in sup1 and e in sup2:
            Ye = _hyperplane_cocircuit(M, common_zero | {e})
            values[e] = -mul(Y1[e], s1.inv(), sigma(Ye), Ye[e1].inv(), Y2[e1])
        elif e in sup1:
            values[e] = Y1[e]
        elif e in sup2:
            values[e] = Y2[e]
    X = TVector.from_mapping(extended_ground(sigma), M.tract, values)
    if not reverse_choice and _debug_enabled() and len(only2) > 1:
        other = mod_cocircuit(sigma, Y1, Y2, reverse_choice=True)
        if other != X:
            raise ExtensionError("Mod depends on the choice of e1", witness=(only2[0], only2[-1], str(X), str(other)))
        logger.debug("Mod cross-check agrees for e1 in %s", only2)
    return X


def _modular_pairs(sigma: Localization) -> Iterator[Tuple[TVector, TVector]]:
    """Pairs (Y1, Y2) of modular cocircuits with Y1 canonical and Y2 scaled so σ(Y2) = -σ(Y1) ≠ 0"""
    M = sigma.base
    side = sigma.side
    dual = M.dual
    for Y1, Y2c in combinations(M.cocircuits, 2):
        s1, s2 = sigma.values[Y1], sigma.values[Y2c]
        if s1.is_zero or s2.is_zero or not dual.is_modular_pair(Y1, Y2c):
            continue
        if M.chirality == "left":
            beta = s2.inv() * (-s1)
        else:
            beta = (-s1) * s2.inv()
        yield Y1, Y2c.scale(beta, side)


def extended_cocircuits(sigma: Localization) -> List[Tuple[TVector, str]]:
    """Lifts (Y, σ(Y)) and every Mod(Y1, Y2, p), canonical and deduplicated, with provenance"""
    ground = extended_ground(sigma)
    side = sigma.side
    found: Dict[TVector, str] = {}
    for Y in sigma.cocircuits():
        found.setdefault(canonical(_lift(sigma, Y, ground), side), f"lifted({Y})")
    for Y1, Y2 in _modular_pairs(sigma):
        X = canonical(mod_cocircuit(sigma, Y1, Y2), side)
        found.setdefault(X, f"modular({Y1}, {Y2})")
    return sorted(found.items(), key=lambda kv: kv[0].sort_key())


def _extension_elimination(sigma: Localization) -> AxiomResult:
    try:
        candidates = [X for X, _ in extended_cocircuits(sigma)]
    except TractMatroidError as e:
        return AxiomResult(axiom="C4*", passed=False, detail=f"candidate cocircuits could not be built: {e.message}")
    failure = next(modular_elimination_failures(candidates, sigma.side), None)
    if failure is None:
        return AxiomResult(axiom="C4*", passed=True, checked=len(candidates))
    X, Y, e = failure
    detail = f"no candidate cocircuit eliminates {e} between {X} and {Y}"
    return AxiomResult(axiom="C4*", passed=False, checked=len(candidates),
                       witness=[str(X), str(Y), e], witness_objects=failure, detail=detail)


def is_localization(sigma: Localization, mode: Mode = "weak", diagnostics: bool = True) -> AxiomReport:
    """
    Basis exchange on the extended family, then P3 and P5 of [·]_p (P4' and
    P5' as well in strong mode). With diagnostics the candidate cocircuit set
    is also checked for modular elimination and reported as C4*.
    """
    report = AxiomReport(subject=repr(sigma), mode=mode)
    bases = extended_bases(sigma)
    exchange = _basis_exchange(extended_ground(sigma), bases)
    report.results.append(exchange)
    if not exchange.passed:
        report.notes.append("quasi-Plücker checks skipped: extended bases do not form a matroid")
        return report
    axioms = ["P3", "P5"] + (["P4'", "P5'"] if mode == "strong" else [])
    report.results.extend(check_qp_axioms(extended_qp(sigma), mode, axioms).results)
    if diagnostics:
        report.results.append(_extension_elimination(sigma))
    logger.debug("is_localization(%s) = %s", mode, report.passed)
    return report


@dataclass(frozen=True)
class ExtensionResult:
    extended: TMatroid
    extended_qp: QuasiPlucker
    cocircuits: Tuple[TVector, ...]
    provenance: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            "matroid": self.extended.to_dict(),
            "cocircuits": [{"vector": X.to_dict(), "from": self.provenance[X.vector_id()]} for X in self.cocircuits],
        }


def extend(sigma: Localization, mode: Mode = "weak") -> ExtensionResult:
    """The extension determined by σ; refuses anything that is not a localization"""
    report = is_localization(sigma, mode, diagnostics=False)
    if not report.passed:
        failure = report.first_failure()
        raise NotALocalizationError(f"σ is not a {mode} localization: {failure.axiom} fails",
                                    report=report, witness=tuple(failure.witness or ()))
    ground = extended_ground(sigma)
    tagged = extended_cocircuits(sigma)
    cocircuits = TMatroid(ground, sigma.tract, sigma.side, [X for X, _ in tagged])
    extended = cocircuits.dual
    if deletion(extended, [sigma.p]) != sigma.base:
        raise ExtensionError("deleting the new element does not give back the base matroid")
    logger.info("extended %r by %s: %d cocircuit classes", sigma.base, sigma.p, len(tagged))
    return ExtensionResult(
        extended=extended,
        extended_qp=extended_qp(sigma),
        cocircuits=tuple(X for X, _ in tagged),
        provenance={X.vector_id(): tag for X, tag in tagged},
    )


def sigma_from_extension(base: TMatroid, extended: TMatroid, p: str = "p") -> Localization:
    """The unique σ with every lift (Y, σ(Y)) a cocircuit of the extension"""
    if p not in extended.ground:
        raise ExtensionError(f"{p!r} is not an element of the extended matroid")
    if extended.ground.without([p]) != base.ground:
        raise ExtensionError("extended ground set is not the base ground set plus the new element")
    if extended.underlying.is_coloop(p):
        raise ExtensionError(f"{p!r} is a coloop; the extension is trivial")
    if deletion(extended, [p]) != base:
        raise ExtensionError("deleting the new element does not give back the base matroid")
    values: Dict[TVector, TractValue] = {}
    for Y in base.cocircuits:
        for Z in extended.cocircuits:
            if Z.restrict(base.ground) == Y:
                values[Y] = Z[p]
                break
        else:
            raise ExtensionError("cocircuit of the base has no lift to the extension", witness=(str(Y),))
    return check_equivariance(base, values, p=p, allow_zero=True)


def scale_sigma(sigma: Localization, alpha: TractValue) -> Localization:
    return sigma.scaled(alpha)


def _require_rank2_triangle(M2: TMatroid) -> None:
    U = M2.underlying
    if len(M2.ground) != 3 or U.full_rank != 2 or any(len(c) < 3 for c in U.circuits):
        raise ExtensionError("the rank 2 test needs a uniform rank 2 matroid on three elements", witness=(repr(M2),))


def verify_elimination_triple(sigma: Localization, Y1: TVector, Y2: TVector, Y3: TVector,
                              e: str) -> Tuple[bool, FormalSum]:
    """Whether Y3 eliminates e between Y1 and Y2, and the sum σ(Y1) + σ(Y2) - σ(Y3)"""
    M = sigma.base
    known = set(M.cocircuits)
    side = sigma.side
    is_elimination = (
        all(canonical(Y, side) in known for Y in (Y1, Y2, Y3))
        and not Y1[e].is_zero and Y1[e] == -Y2[e] and Y3[e].is_zero
        and sum_contains(Y1, Y2, Y3)
    )
    terms = FormalSum([sigma(Y1), sigma(Y2), -sigma(Y3)], sigma.tract)
    return is_elimination, terms


def elimination_triples(sigma: Localization) -> Iterator[Tuple[TVector, TVector, TVector, str]]:
    """Every (Y1, Y2, Y3, e) with Y1 canonical and Y3 eliminating e between Y1 and Y2"""
    M = sigma.base
    side = sigma.side
    for Y1, Y2c in combinations(M.cocircuits, 2):
        for Ya, Yb in ((Y1, Y2c), (Y2c, Y1)):
            for e in M.ground.ordered(Ya.support() & Yb.support()):
                beta = Yb[e].inv() * (-Ya[e]) if side == "right" else (-Ya[e]) * Yb[e].inv()
                Yb_scaled = Yb.scale(beta, side)
                for Y3 in eliminants(M.cocircuits, Ya, Yb_scaled, e, side):
                    yield Ya, Yb_scaled, Y3, e


def find_elimination_triple(M2: TMatroid, sigma: Localization) -> Optional[Tuple[TVector, TVector, TVector, str]]:
    """An elimination triple whose σ values sum to a null sum, or None"""
    _require_rank2_triangle(M2)
    if sigma.base != M2:
        raise ExtensionError("σ is defined on a different matroid")
    for Y1, Y2, Y3, e in elimination_triples(sigma):
        if is_null([sigma(Y1), sigma(Y2), -sigma(Y3)]):
            return Y1, Y2, Y3, e
    return None


def rank2_localization_test(M2: TMatroid, sigma: Localization) -> bool:
    """On a uniform rank 2 matroid with three elements σ is a localization iff some elimination triple has null σ-sum"""
    return find_elimination_triple(M2, sigma) is not None


def modular_triple_criterion(sigma: Localization) -> AxiomReport:
    """σ(Y1) + σ(Y2) - σ(Y) null for every modular pair and every Y eliminating between them"""
    report = AxiomReport(subject=repr(sigma), mode="weak")
    dual = sigma.base.dual
    checked = 0
    witness = None
    for Y1, Y2, Y3, e in elimination_triples(sigma):
        if not dual.is_modular_pair(Y1, Y2):
            continue
        checked += 1
        terms = [sigma(Y1), sigma(Y2), -sigma(Y3)]
        if not is_null(terms):
            witness = (Y1, Y2, Y3, e, FormalSum(terms, sigma.tract))
            break
    report.results.append(AxiomResult(
        axiom="modular-triple", passed=witness is None, checked=checked,
        witness=[str(w) for w in witness] if witness else None, witness_objects=witness))
    return report


def elimination_defect(Y1: TVector, Y2: TVector, Z: TVector):
    """First coordinate where Z ∉ Y1 + Y2, with its terms"""
    return coordinate_defect([Y1, Y2], Z)

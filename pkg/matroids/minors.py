"""
Minors
Deletion, contraction, minors of quasi-Plücker data, rescaling and induced localizations
"""
import logging
import os
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Literal, Mapping, Optional, Set

from errors import MinorError, QuasiPluckerError, TractDomainError
from matroids.plucker import BasisPair, QuasiPlucker
from matroids.tmatroid import TMatroid, flip
from matroids.tvec import GroundSet, TVector
from tracts.core import TractValue

logger = logging.getLogger(__name__)

MinorKind = Literal["contract", "delete"]


def _debug_enabled() -> bool:
    return os.getenv("TRACT_MATROIDS_DEBUG", "false").lower() == "true"


def _checked_subset(ground: GroundSet, labels: Iterable[str], what: str) -> FrozenSet[str]:
    labels = frozenset(labels)
    unknown = [e for e in labels if e not in ground]
    if unknown:
        raise MinorError(f"{what} names elements outside the ground set", witness=tuple(sorted(unknown)))
    return labels


def _minimal_supports(vectors: Iterable[TVector]) -> List[TVector]:
    candidates = [X for X in vectors if X.support()]
    supports = {X.support() for X in candidates}
    return [X for X in candidates if not any(s < X.support() for s in supports)]


@lru_cache(maxsize=1024)
def _deletion(M: TMatroid, A: FrozenSet[str]) -> TMatroid:
    ground = M.ground.without(A)
    return TMatroid(ground, M.tract, M.chirality,
                    [X.restrict(ground) for X in M.circuits if not X.support() & A])


@lru_cache(maxsize=1024)
def _contraction(M: TMatroid, A: FrozenSet[str]) -> TMatroid:
    ground = M.ground.without(A)
    return TMatroid(ground, M.tract, M.chirality, _minimal_supports(X.restrict(ground) for X in M.circuits))


def deletion(M: TMatroid, A: Iterable[str]) -> TMatroid:
    """M ∖ A: circuits avoiding A, restricted to E ∖ A"""
    A = _checked_subset(M.ground, A, "deletion set")
    if not A:
        return M
    if A == set(M.ground.labels):
        raise MinorError("cannot delete the whole ground set")
    return _deletion(M, A)


def contraction(M: TMatroid, A: Iterable[str]) -> TMatroid:
    """M / A: the minimal nonzero supports among the restrictions X ∖ A"""
    A = _checked_subset(M.ground, A, "contraction set")
    if not A:
        return M
    if A == set(M.ground.labels):
        raise MinorError("cannot contract the whole ground set")
    return _contraction(M, A)


def minor(M: TMatroid, delete: Iterable[str] = (), contract: Iterable[str] = ()) -> TMatroid:
    """(M ∖ A) / B for disjoint A, B with A ∪ B ≠ E"""
    A = _checked_subset(M.ground, delete, "deletion set")
    B = _checked_subset(M.ground, contract, "contraction set")
    if A & B:
        raise MinorError("deletion and contraction sets overlap", witness=tuple(M.ground.ordered(A & B)))
    if A | B == set(M.ground.labels):
        raise MinorError("a minor must keep at least one element")
    result = contraction(deletion(M, A), B)
    logger.debug("minor of %r deleting %s contracting %s", M, sorted(A), sorted(B))
    return result


def _qp_restrict(Q: QuasiPlucker, A: FrozenSet[str], extra: FrozenSet[str]) -> QuasiPlucker:
    """[B, B'] ↦ [B ∪ extra, B' ∪ extra] on the bases of E ∖ A that complete with extra"""
    ground = Q.ground.without(A)
    bases = [B - extra for B in Q.bases if extra <= B and not (B - extra) & A]
    values: Dict[BasisPair, TractValue] = {}
    for B in bases:
        for B2 in bases:
            if len(B - B2) == 1:
                values[(B, B2)] = Q[(B | extra, B2 | extra)]
    return QuasiPlucker(ground, Q.tract, Q.chirality, bases, values)


def _qp_choice(Q: QuasiPlucker, A: FrozenSet[str], kind: MinorKind, reverse: bool) -> FrozenSet[str]:
    U = Q.underlying()
    if kind == "contract":
        return U.max_independent_subset(A, reverse=reverse)
    rest = frozenset(Q.ground.labels) - A
    chosen = set(U.max_independent_subset(rest))
    order = Q.ground.ordered(A)
    for e in (reversed(order) if reverse else order):
        if U.is_independent(chosen | {e}):
            chosen.add(e)
    return frozenset(chosen) & A


def qp_minor(Q: QuasiPlucker, A: Iterable[str], kind: MinorKind, verify_choice: Optional[bool] = None) -> QuasiPlucker:
    """
    Contraction uses [B ∪ I_A, B' ∪ I_A] with I_A a maximal independent subset
    of A. Deletion uses [B ∪ J_A, B' ∪ J_A] with J_A ⊆ A completing E ∖ A to a
    spanning set. Both choices are greedy in ground order; with debug enabled
    a reverse-order choice is computed too and must agree.
    """
    A = _checked_subset(Q.ground, A, "minor set")
    if kind not in ("contract", "delete"):
        raise MinorError(f"unknown minor kind {kind!r}")
    if not A:
        return Q
    if A == set(Q.ground.labels):
        raise MinorError("a minor must keep at least one element")
    chosen = _qp_choice(Q, A, kind, reverse=False)
    result = _qp_restrict(Q, A, chosen)
    if verify_choice is None:
        verify_choice = _debug_enabled()
    if verify_choice:
        other = _qp_choice(Q, A, kind, reverse=True)
        if other != chosen:
            logger.debug("qp_minor cross-check: %s vs %s", Q.fmt(chosen), Q.fmt(other))
            if _qp_restrict(Q, A, other) != result:
                raise QuasiPluckerError("minor depends on the choice of independent set",
                                        witness=(Q.fmt(chosen), Q.fmt(other)))
    return result


class RescalingMap:
    """ρ: a nonzero tract value for every ground element"""

    def __init__(self, ground: GroundSet, values: Mapping[str, TractValue]):
        missing = [e for e in ground if e not in values]
        if missing:
            raise TractDomainError("rescaling map must be total on the ground set", witness=tuple(missing))
        for e in ground:
            if values[e].is_zero:
                raise TractDomainError("rescaling values must be nonzero", witness=(e,))
        self.ground = ground
        self.values = {e: values[e] for e in ground}

    @classmethod
    def identity(cls, ground: GroundSet, tract) -> "RescalingMap":
        return cls(ground, {e: tract.one for e in ground})

    @classmethod
    def parse(cls, ground: GroundSet, tract, raw: Mapping[str, str]) -> "RescalingMap":
        unknown = set(raw) - set(ground.labels)
        if unknown:
            raise MinorError("rescaling names unknown elements", witness=tuple(sorted(unknown)))
        return cls(ground, {e: tract.value(raw[e]) if e in raw else tract.one for e in ground})

    def __getitem__(self, e: str) -> TractValue:
        return self.values[e]

    def inverse(self) -> "RescalingMap":
        return RescalingMap(self.ground, {e: v.inv() for e, v in self.values.items()})

    def apply(self, X: TVector, on: Literal["circuits", "cocircuits"], chirality) -> TVector:
        """
        For a left matroid circuits become X·conj(ρ)^-1 and cocircuits ρ·Y;
        a right matroid takes conj(ρ)^-1·X and Y·ρ.
        """
        entries = []
        for e, x in X.items():
            r = self.values[e]
            if on == "circuits":
                c = r.conj().inv()
                entries.append(x * c if chirality == "left" else c * x)
            else:
                entries.append(r * x if chirality == "left" else x * r)
        return TVector(X.ground, X.tract, entries)


def rescale(M: TMatroid, rho: RescalingMap) -> TMatroid:
    if rho.ground != M.ground:
        raise MinorError("rescaling map lives on a different ground set")
    return TMatroid(M.ground, M.tract, M.chirality, [rho.apply(X, "circuits", M.chirality) for X in M.circuits])


def rescale_cocircuits(M: TMatroid, rho: RescalingMap) -> TMatroid:
    """ρ applied to the cocircuits of M, as the circuit set of a matroid of the dual chirality"""
    return TMatroid(M.ground, M.tract, flip(M.chirality),
                    [rho.apply(Y, "cocircuits", M.chirality) for Y in M.cocircuits])


def induce_sigma(sigma, A: Iterable[str], kind: MinorKind):
    """
    The localization induced on M / A or M ∖ A. A contraction cocircuit
    keeps its value; a deletion cocircuit U takes σ(X) for the cocircuit X of M
    with X ∖ A a multiple of U, rescaled by equivariance.
    """
    from extensions.localization import Localization

    M = sigma.base
    A = _checked_subset(M.ground, A, "minor set")
    if not A:
        return sigma
    if kind == "contract":
        minor_matroid = contraction(M, A)
    elif kind == "delete":
        minor_matroid = deletion(M, A)
    else:
        raise MinorError(f"unknown minor kind {kind!r}")
    ground = minor_matroid.ground
    values: Dict[TVector, TractValue] = {}
    for U in minor_matroid.cocircuits:
        found: Set[str] = set()
        value = None
        for X in M.cocircuits:
            R = X.restrict(ground)
            if kind == "contract" and X.support() & A:
                continue
            if R.support() != U.support():
                continue
            u0 = U.first_support()
            if M.chirality == "left":
                beta = R[u0].inv() * U[u0]
                candidate_vector, candidate = R.scale(beta, "right"), sigma.values[X] * beta
            else:
                beta = U[u0] * R[u0].inv()
                candidate_vector, candidate = R.scale(beta, "left"), beta * sigma.values[X]
            if candidate_vector != U:
                continue
            found.add(str(candidate))
            value = candidate
        if value is None:
            raise MinorError("a cocircuit of the minor has no preimage", witness=(str(U),))
        if len(found) > 1:
            raise MinorError("preimages of a minor cocircuit disagree under σ", witness=(str(U),) + tuple(sorted(found)))
        values[U] = value
    return Localization(minor_matroid, values, sigma.p)

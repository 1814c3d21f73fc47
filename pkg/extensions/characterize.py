"""
Characterization
Localization verdicts on the whole matroid, on its rank 2 contractions and on its rank 2 minors with three elements
"""
import asyncio
import logging
from itertools import combinations
from typing import Any, Callable, List, Set, Tuple

from extensions.extension import is_localization
from extensions.localization import Localization
from matroids.minors import contraction, induce_sigma
from matroids.tmatroid import Mode
from models import CharacterizationVerdict
from tracts.core import TractValue
from tracts.properties import check_stringent

logger = logging.getLogger(__name__)

Job = Tuple[str, Callable[[], Any]]


def _fmt(sigma: Localization, s) -> str:
    return "{" + ",".join(sigma.base.ground.ordered(s)) + "}"


def rank2_contractions(sigma: Localization) -> List[Tuple[frozenset, Localization]]:
    """σ induced on M / A for every flat A of rank d - 2, in discovery order"""
    M = sigma.base
    U = M.underlying
    d = U.full_rank
    if d < 2:
        return []
    out = []
    for A in U.flats_of_rank(d - 2):
        out.append((A, induce_sigma(sigma, A, "contract")))
    return out


def rank2_minors3(sigma: Localization) -> List[Tuple[str, Localization]]:
    """σ induced on every rank 2 minor with three elements, through the contraction by its flat"""
    out = []
    for A, contracted in rank2_contractions(sigma):
        N = contracted.base
        for S in combinations(N.ground.labels, 3):
            if N.underlying.rank(S) != 2:
                continue
            rest = [e for e in N.ground if e not in S]
            label = f"/{_fmt(sigma, A)} on {_fmt(sigma, S)}"
            out.append((label, induce_sigma(contracted, rest, "delete")))
    return out


def _relevant_values(sigma: Localization) -> List[TractValue]:
    M = sigma.base
    values: Set[TractValue] = {M.tract.one}
    for X in M.circuits + M.cocircuits:
        values.update(v for _, v in X.items() if not v.is_zero)
    values.update(v for v in sigma.values.values() if not v.is_zero)
    return sorted(values, key=str)


def is_covered(sigma: Localization) -> bool:
    """Strong verdicts are covered by the equivalence only over stringent tracts"""
    t = sigma.tract
    sample = t.carrier() or _relevant_values(sigma)
    return check_stringent(t, sample=sample).holds


async def _run_jobs(jobs: List[Job], limit: int) -> List[Any]:
    semaphore = asyncio.Semaphore(max(1, limit))

    async def run(job: Job) -> Any:
        async with semaphore:
            return await asyncio.to_thread(job[1])

    return await asyncio.gather(*(run(job) for job in jobs))


def run_jobs(jobs: List[Job], limit: int = 1) -> List[Any]:
    """Run independent checks, at most limit at a time; results keep job order"""
    if limit <= 1:
        return [fn() for _, fn in jobs]
    return asyncio.run(_run_jobs(jobs, limit))


def characterize(sigma: Localization, mode: Mode = "weak", jobs: int = 1) -> CharacterizationVerdict:
    """
    The three conditions of the characterization, each computed on its own:
    σ is a localization of M, of every rank 2 contraction, and of every rank 2
    minor on three elements.
    """
    full = is_localization(sigma, mode, diagnostics=False).passed
    contractions = [(f"/{_fmt(sigma, A)}", s) for A, s in rank2_contractions(sigma)]
    minors = rank2_minors3(sigma)
    logger.info("characterize: %d rank 2 contractions, %d three-element minors", len(contractions), len(minors))
    checks: List[Job] = [
        (label, lambda s=s: is_localization(s, mode, diagnostics=False).passed)
        for label, s in contractions + minors
    ]
    verdicts = run_jobs(checks, jobs)
    contraction_verdicts = verdicts[:len(contractions)]
    minor_verdicts = verdicts[len(contractions):]
    verdict = CharacterizationVerdict(
        mode=mode,
        full=full,
        rank2_contractions=all(contraction_verdicts),
        rank2_minors3=all(minor_verdicts),
        failing_contractions=[label for (label, _), ok in zip(contractions, contraction_verdicts) if not ok],
        failing_minors=[label for (label, _), ok in zip(minors, minor_verdicts) if not ok],
    )
    if sigma.base.rank < 2:
        verdict.notes.append("rank below 2: no rank 2 contractions or minors")
    if mode == "strong" and not is_covered(sigma):
        verdict.covered = False
        verdict.notes.append(f"{sigma.tract.name} is not stringent; strong verdicts are not covered by the equivalence")
    return verdict

"""
Check Service
Loads tract, matroid, σ and ρ files and runs the library checks behind every CLI subcommand
"""
import asyncio
import logging
import os
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple

from dotenv import load_dotenv

from errors import ParseError
from extensions import Localization, characterize, check_equivariance, extend, is_localization, modular_triple_criterion
from fixture_service import FIXTURE_NAMES, run_fixture
from matroids import (
    RescalingMap, TMatroid, check_circuit_axioms, check_qp_axioms, minor, orthogonality, qp_from_circuits,
    rescale, rescale_cocircuits,
)
from models import (
    AxiomReport, AxiomResult, CharacterizationVerdict, ExtensionReport, FixtureReport, MatroidFileModel,
    PropertyVerdict, RescalingFileModel, SigmaFileModel, TractFileModel,
)
from tracts import Tract, get_tract
from tracts.properties import PROPERTY_CHECKS

load_dotenv()

logger = logging.getLogger(__name__)


def _int_setting(name: str, raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise ParseError(f"{name} must be a positive integer, got {raw!r}", position=name)
    return value


class CheckService:
    """
    Runs checks for the command line.
    Loaders raise ParseError or pydantic ValidationError on malformed input;
    check methods return report models and never raise on a failed verdict.
    """

    def __init__(self):
        self._jobs = os.getenv("TRACT_MATROIDS_JOBS", "1")
        self._family_cap = os.getenv("TRACT_MATROIDS_FAMILY_CAP", "5")
        self.debug = os.getenv("TRACT_MATROIDS_DEBUG", "false").lower() == "true"

    @property
    def jobs(self) -> int:
        return _int_setting("TRACT_MATROIDS_JOBS", self._jobs)

    @property
    def family_cap(self) -> int:
        return _int_setting("TRACT_MATROIDS_FAMILY_CAP", self._family_cap)

    def settings(self) -> Dict[str, object]:
        """Parsed settings; a malformed value raises ParseError naming the variable"""
        return {"jobs": self.jobs, "family_cap": self.family_cap, "debug": self.debug}

    def _read(self, path: str) -> str:
        try:
            with open(path, encoding="utf-8") as handle:
                return handle.read()
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e.strerror}", position=path)

    def load_matroid(self, path: str) -> TMatroid:
        model = MatroidFileModel.model_validate_json(self._read(path))
        M = TMatroid.from_model(model)
        logger.info("loaded %r from %s", M, path)
        return M

    def load_sigma(self, M: TMatroid, path: str) -> Localization:
        model = SigmaFileModel.model_validate_json(self._read(path))
        return check_equivariance(M, model.values, p=model.p)

    def load_tract(self, path: str) -> Tuple[Tract, Optional[str]]:
        model = TractFileModel.model_validate_json(self._read(path))
        return get_tract(model.tract.as_descriptor()), model.sample

    def load_rho(self, M: TMatroid, path: str) -> RescalingMap:
        model = RescalingFileModel.model_validate_json(self._read(path))
        return RescalingMap.parse(M.ground, M.tract, model.values)

    def validate(self, M: TMatroid, mode: str = "weak") -> Tuple[bool, dict]:
        """Circuit axioms, the same axioms on the cocircuits, and full orthogonality"""
        circuits = check_circuit_axioms(M, mode, self.family_cap)
        if not circuits.passed:
            return False, {"circuits": circuits.model_dump(mode="json"), "cocircuits": None, "orthogonality": None}
        cocircuits = check_circuit_axioms(M.dual, mode, self.family_cap)
        orthogonal = AxiomResult(axiom="orthogonality", passed=True)
        for X, Y in product(M.circuits, M.cocircuits):
            orthogonal.checked += 1
            terms, ok = orthogonality(X, Y, M.chirality)
            if not ok:
                orthogonal = AxiomResult(axiom="orthogonality", passed=False, checked=orthogonal.checked,
                                         witness=[str(X), str(Y), str(terms)], witness_objects=(X, Y))
                break
        passed = circuits.passed and cocircuits.passed and orthogonal.passed
        return passed, {
            "rank": M.rank,
            "circuits": circuits.model_dump(mode="json"),
            "cocircuits": cocircuits.model_dump(mode="json"),
            "orthogonality": orthogonal.model_dump(mode="json"),
        }

    def dual(self, M: TMatroid) -> dict:
        D = M.dual
        return {"matroid": D.to_dict(), "rank": M.rank, "dual_rank": D.rank}

    def minor(self, M: TMatroid, delete: Iterable[str], contract: Iterable[str]) -> dict:
        N = minor(M, delete, contract)
        return {"matroid": N.to_dict(), "rank": N.rank}

    def rescale(self, M: TMatroid, rho: RescalingMap) -> Tuple[bool, dict]:
        N = rescale(M, rho)
        report = check_circuit_axioms(N, "weak", self.family_cap)
        return report.passed, {
            "matroid": N.to_dict(),
            "cocircuits": [Y.to_dict() for Y in rescale_cocircuits(M, rho).circuits],
            "axioms": report.model_dump(mode="json"),
        }

    def plucker(self, M: TMatroid, mode: str = "weak") -> Tuple[bool, dict]:
        Q = qp_from_circuits(M)
        report = check_qp_axioms(Q, mode)
        return report.passed, {"values": Q.as_dict(), "axioms": report.model_dump(mode="json")}

    def check_localization(self, sigma: Localization, mode: str = "weak") -> AxiomReport:
        return is_localization(sigma, mode)

    def extend(self, sigma: Localization, mode: str = "weak") -> ExtensionReport:
        report = is_localization(sigma, mode)
        if not report.passed:
            return ExtensionReport(passed=False, localization=report)
        result = extend(sigma, mode)
        payload = result.to_dict()
        return ExtensionReport(passed=True, localization=report, extended=payload["matroid"],
                               cocircuits=payload["cocircuits"])

    async def characterize(self, sigma: Localization, mode: str = "weak", jobs: Optional[int] = None,
                           cross_check: bool = False) -> Tuple[CharacterizationVerdict, Optional[AxiomReport]]:
        jobs = jobs or self.jobs
        verdict = await asyncio.to_thread(characterize, sigma, mode, jobs)
        criterion = await asyncio.to_thread(modular_triple_criterion, sigma) if cross_check else None
        return verdict, criterion

    def check_tract(self, tract: Tract, prop: str, sample: Optional[str] = None) -> PropertyVerdict:
        if prop not in PROPERTY_CHECKS:
            raise ParseError(f"unknown property {prop!r}; expected one of {', '.join(PROPERTY_CHECKS)}",
                             position="--property")
        return PROPERTY_CHECKS[prop](tract, spec=sample)

    async def repro(self, names: Optional[List[str]] = None, jobs: Optional[int] = None) -> List[FixtureReport]:
        """Reproduce fixtures concurrently; reports keep the requested order"""
        names = names or list(FIXTURE_NAMES)
        semaphore = asyncio.Semaphore(jobs or self.jobs)

        async def run(name: str) -> FixtureReport:
            async with semaphore:
                return await asyncio.to_thread(run_fixture, name)

        return await asyncio.gather(*(run(name) for name in names))


check_service = CheckService()

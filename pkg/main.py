"""
Tract Matroids CLI
Batch front end: loads tract, matroid and σ files, runs checks and writes one JSON report to stdout
"""
from dotenv import load_dotenv
load_dotenv()  # Load environment variables from .env file

import argparse
import asyncio
import json
import logging
import os
import sys
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ValidationError

from check_service import check_service
from errors import TractMatroidError
from fixture_service import FIXTURE_NAMES
from models import CommandReport, ErrorReport, ReportStatus
from tracts.properties import PROPERTY_CHECKS

logger = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=None,
                        help="independent sub-checks run at most N at a time (default: TRACT_MATROIDS_JOBS or 1)")
    common.add_argument("--log-level", default=os.getenv("TRACT_MATROIDS_LOG_LEVEL", "WARNING"),
                        help="stderr logging level (default: TRACT_MATROIDS_LOG_LEVEL or WARNING)")
    common.add_argument("--mode", choices=("weak", "strong"), default="weak")

    parser = argparse.ArgumentParser(
        prog="tract-matroids",
        description="Matroids over skew tracts and hyperfields: axiom checks, duals, minors and single-element extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, *flags: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        if "matroid" in flags:
            p.add_argument("--matroid", required=True, metavar="FILE", help="matroid JSON file")
        if "sigma" in flags:
            p.add_argument("--sigma", required=True, metavar="FILE", help="σ JSON file")
        return p

    command("validate", "circuit and cocircuit axioms plus orthogonality", "matroid")
    command("dual", "the dual matroid", "matroid")
    p = command("minor", "deletion and contraction", "matroid")
    p.add_argument("--delete", default="", help="comma-separated labels to delete")
    p.add_argument("--contract", default="", help="comma-separated labels to contract")
    p = command("rescale", "rescale by ρ", "matroid")
    p.add_argument("--rho", required=True, metavar="FILE", help="rescaling JSON file")
    command("plucker", "quasi-Plücker coordinates and their axioms", "matroid")
    command("extend", "the single-element extension defined by σ", "matroid", "sigma")
    command("check-localization", "whether σ is a localization", "matroid", "sigma")
    p = command("characterize", "localization verdicts on M, rank 2 contractions and rank 2 minors", "matroid", "sigma")
    p.add_argument("--cross-check", action="store_true", help="also run the modular triple criterion")
    p = command("check-tract", "tract property over a finite sample")
    p.add_argument("--tract", required=True, metavar="FILE", help="tract JSON file")
    p.add_argument("--property", required=True, choices=sorted(PROPERTY_CHECKS))
    p.add_argument("--sample", default=None, help='"full", "roots:n", "layers:lo..hi" or a ";"-separated value list')
    p = command("repro", "reproduce embedded fixtures against their expected verdicts")
    p.add_argument("--fixture", choices=FIXTURE_NAMES, default=None, help="one fixture (default: all)")
    return parser.parse_args(argv)


def configure_logging(level: str) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(getattr(logging, level.upper(), logging.WARNING))


def emit(report: BaseModel) -> None:
    print(json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False))


def _labels(raw: str) -> List[str]:
    return [label.strip() for label in raw.split(",") if label.strip()]


def _dump(model: BaseModel) -> dict:
    return model.model_dump(mode="json")


Outcome = Tuple[bool, Dict]


def run_validate(args) -> Outcome:
    return check_service.validate(check_service.load_matroid(args.matroid), args.mode)


def run_dual(args) -> Outcome:
    return True, check_service.dual(check_service.load_matroid(args.matroid))


def run_minor(args) -> Outcome:
    M = check_service.load_matroid(args.matroid)
    return True, check_service.minor(M, _labels(args.delete), _labels(args.contract))


def run_rescale(args) -> Outcome:
    M = check_service.load_matroid(args.matroid)
    return check_service.rescale(M, check_service.load_rho(M, args.rho))


def run_plucker(args) -> Outcome:
    return check_service.plucker(check_service.load_matroid(args.matroid), args.mode)


def run_extend(args) -> Outcome:
    M = check_service.load_matroid(args.matroid)
    report = check_service.extend(check_service.load_sigma(M, args.sigma), args.mode)
    return report.passed, _dump(report)


def run_check_localization(args) -> Outcome:
    M = check_service.load_matroid(args.matroid)
    report = check_service.check_localization(check_service.load_sigma(M, args.sigma), args.mode)
    return report.passed, _dump(report)


def run_characterize(args) -> Outcome:
    M = check_service.load_matroid(args.matroid)
    sigma = check_service.load_sigma(M, args.sigma)
    verdict, criterion = asyncio.run(check_service.characterize(sigma, args.mode, args.jobs, args.cross_check))
    data = {"verdict": _dump(verdict), "triple": list(verdict.as_tuple())}
    if criterion is not None:
        data["modular_triple_criterion"] = _dump(criterion)
    return all(verdict.as_tuple()), data


def run_check_tract(args) -> Outcome:
    tract, file_sample = check_service.load_tract(args.tract)
    verdict = check_service.check_tract(tract, args.property, args.sample or file_sample)
    return verdict.holds, _dump(verdict)


def run_repro(args) -> Outcome:
    names = [args.fixture] if args.fixture else None
    reports = asyncio.run(check_service.repro(names, args.jobs))
    mismatches = {r.fixture: r.mismatches() for r in reports if not r.matches}
    return not mismatches, {"fixtures": [_dump(r) for r in reports], "mismatches": mismatches}


HANDLERS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "validate": run_validate,
    "dual": run_dual,
    "minor": run_minor,
    "rescale": run_rescale,
    "plucker": run_plucker,
    "extend": run_extend,
    "check-localization": run_check_localization,
    "characterize": run_characterize,
    "check-tract": run_check_tract,
    "repro": run_repro,
}


def _validation_position(e: ValidationError) -> Tuple[str, Optional[str]]:
    first = e.errors()[0]
    if first.get("type") == "json_invalid":
        return first["msg"], str(first.get("ctx", {}).get("error", "")) or None
    return first["msg"], ".".join(str(part) for part in first.get("loc", ())) or None


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    configure_logging(args.log_level)
    logger.info("running %s", args.command)
    try:
        logger.debug("settings %s", check_service.settings())
        passed, data = HANDLERS[args.command](args)
    except ValidationError as e:
        message, position = _validation_position(e)
        emit(ErrorReport(command=args.command, error=message, error_type="ValidationError", position=position))
        return EXIT_INPUT
    except TractMatroidError as e:
        emit(ErrorReport(command=args.command, error=str(e), error_type=type(e).__name__,
                         position=getattr(e, "position", None)))
        return EXIT_INPUT
    status = ReportStatus.PASS if passed else ReportStatus.FAIL
    emit(CommandReport(command=args.command, status=status, data=data))
    return EXIT_PASS if passed else EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())

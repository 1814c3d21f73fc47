"""
Fixture Service
Embedded matroids, localizations and tract quintuples with their expected verdicts
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Dict, List, Tuple

from extensions import (
    Localization, characterize, check_equivariance, elimination_defect, extend, is_localization,
    mod_cocircuit, modular_triple_criterion, rank2_localization_test, run_jobs, sigma_from_extension,
    verify_elimination_triple,
)
from matroids import (
    GroundSet, TMatroid, TVector, check_circuit_axioms, deletion, extension_sigma, induce_sigma,
    matroid_from_vectors,
)
from errors import ParseError
from models import FixtureReport
from tracts import (
    PHASE, SIGN, Tract, check_pathetic_cancellation, check_stringent, check_strong_pc, hypersum_contains, is_null,
    layer,
)

logger = logging.getLogger(__name__)

FIXTURE_NAMES = ("table2-counterexample", "table1-rank2", "exam2-quintuple", "sign-u34", "layered-window")


@dataclass(frozen=True)
class Counterexample:
    matroid: TMatroid
    sigma: Localization
    rows: Dict[str, TVector]
    constants: Dict[str, Any]


def phase_constants() -> Dict[str, Any]:
    return {name: PHASE.value(text) for name, text in
            (("a", "ph:3/8"), ("b", "ph:1/8"), ("x", "ph:1/12"), ("y", "ph:1/3"), ("z", "ph:1/4"))}


def counterexample() -> Counterexample:
    """
    Rank 3 left phased matroid on y1..y4 given by six cocircuit representatives,
    with σ = 1, 1, -1, x, y, z on Y23, Y13, Y12, Y24, Y34, Y14.
    """
    c = phase_constants()
    a, b, x, y, z = c["a"], c["b"], c["x"], c["y"], c["z"]
    one, zero = PHASE.one, PHASE.zero
    ground = GroundSet(["y1", "y2", "y3", "y4"])
    table = {
        "Y23": (one, zero, zero, one),
        "Y13": (zero, one, zero, b.inv()),
        "Y12": (zero, zero, one, a.inv()),
        "Y24": (one, zero, -a, zero),
        "Y34": (-one, b, zero, zero),
        "Y14": (zero, b, -a, zero),
    }
    rows = {name: TVector(ground, PHASE, entries) for name, entries in table.items()}
    M = TMatroid(ground, PHASE, "right", rows.values()).dual
    raw = {rows["Y23"]: one, rows["Y13"]: one, rows["Y12"]: -one, rows["Y24"]: x, rows["Y34"]: y, rows["Y14"]: z}
    sigma = check_equivariance(M, raw, p="p")
    return Counterexample(M, sigma, rows, c)


def contraction_triples(fx: Counterexample) -> Dict[str, Tuple[TVector, TVector, TVector, str, str]]:
    """For each M/y_i: (Y1, Y2, Y3, e, expected sum) of the elimination triple used by the rank 2 test"""
    r = fx.rows
    c = fx.constants
    a, b = c["a"], c["b"]

    def cut(Y: TVector, label: str) -> TVector:
        return Y.restrict(fx.matroid.ground.without([label]))

    return {
        "y1": (cut(r["Y13"].scale(b, "right"), "y1"), cut(r["Y12"].scale(-a, "right"), "y1"), cut(r["Y14"], "y1"),
               "y4", "b + a - z"),
        "y2": (cut(r["Y23"], "y2"), cut(r["Y12"].scale(-a, "right"), "y2"), cut(r["Y24"], "y2"),
               "y4", "1 + a - x"),
        "y3": (cut(-r["Y23"], "y3"), cut(r["Y13"].scale(b, "right"), "y3"), cut(r["Y34"], "y3"),
               "y4", "-1 + b - y"),
        "y4": (cut(r["Y24"], "y4"), cut(r["Y34"], "y4"), cut(r["Y14"], "y4"), "y1", "x + y - z"),
    }


def expected_mod_cocircuits(fx: Counterexample) -> Dict[str, TVector]:
    ground = fx.matroid.ground.with_element("p")
    v = lambda *texts: TVector(ground, PHASE, [PHASE.value(t) for t in texts])
    return {
        "Y1": v("1", "0", "1", "ph:17/24", "0"),
        "Y2": v("-1", "1", "0", "ph:17/24", "0"),
        "Z": v("0", "1", "1", "ph:3/4", "0"),
    }


def table3_rows(fx: Counterexample) -> Dict[str, TVector]:
    """The lifted cocircuits written out with their p column"""
    ground = fx.matroid.ground.with_element("p")
    c = fx.constants
    p_column = {"Y23": PHASE.one, "Y13": PHASE.one, "Y12": -PHASE.one, "Y24": c["x"], "Y34": c["y"], "Y14": c["z"]}
    return {name: Y.extend(ground, {"p": p_column[name]}) for name, Y in fx.rows.items()}


def _run_counterexample(jobs: int) -> Tuple[Dict, Dict, Dict]:
    fx = counterexample()
    M, sigma, rows = fx.matroid, fx.sigma, fx.rows
    observed: Dict[str, Any] = {
        "cocircuit_axioms_weak": check_circuit_axioms(M.dual, "weak").passed,
        "cocircuit_axioms_strong": check_circuit_axioms(M.dual, "strong").passed,
    }
    contractions = {}
    for label, (Y1, Y2, Y3, e, written) in contraction_triples(fx).items():
        induced = induce_sigma(sigma, [label], "contract")
        eliminates, terms = verify_elimination_triple(induced, Y1, Y2, Y3, e)
        contractions[f"/{label}"] = {
            "eliminates": eliminates,
            "sum": written,
            "terms": [str(t) for t in terms],
            "null": is_null(terms),
            "rank2_test": rank2_localization_test(induced.base, induced),
        }
    observed["rank2_contractions_pass"] = all(
        v["eliminates"] and v["null"] and v["rank2_test"] for v in contractions.values())

    lifted = {name: Y.extend(M.ground.with_element("p"), {"p": sigma(Y)}) for name, Y in rows.items()}
    observed["table3"] = {name: str(X) for name, X in lifted.items()}

    mods = {
        "Y1": mod_cocircuit(sigma, rows["Y23"], rows["Y12"]),
        "Y2": mod_cocircuit(sigma, -rows["Y23"], rows["Y13"]),
        "Z": mod_cocircuit(sigma, rows["Y13"], rows["Y12"]),
    }
    observed["mod_cocircuits"] = {name: str(X) for name, X in mods.items()}
    defect = elimination_defect(mods["Y1"], mods["Y2"], mods["Z"])
    observed["defect"] = None if defect is None else {"at": defect[0], "terms": [str(t) for t in defect[1]]}

    report = is_localization(sigma, "weak")
    failure = report.first_failure()
    observed["is_localization"] = report.passed
    observed["failing_axiom"] = failure.axiom if failure else None
    observed["characterize"] = list(characterize(sigma, "weak", jobs=jobs).as_tuple())

    expected = {
        "cocircuit_axioms_weak": True,
        "cocircuit_axioms_strong": True,
        "rank2_contractions_pass": True,
        "table3": {name: str(X) for name, X in table3_rows(fx).items()},
        "mod_cocircuits": {name: str(X) for name, X in expected_mod_cocircuits(fx).items()},
        "defect": {"at": "y4", "terms": ["ph:17/24", "ph:17/24", "ph:1/4"]},
        "is_localization": False,
        "failing_axiom": "P5",
        "characterize": [False, True, True],
    }
    details = {
        "contractions": contractions,
        "localization_report": report.model_dump(mode="json"),
        "modular_triple_criterion": modular_triple_criterion(sigma).passed,
    }
    return expected, observed, details


TABLE1_VECTORS = {"e1": (1, 0), "e2": (0, 1), "e3": (-1, 1)}
TABLE1_P = (1, 1)


def table1_localization() -> Localization:
    """σ = (1, 1, 1) on the three sign cocircuits of U_{2,3}, realized by p = (1, 1)"""
    return extension_sigma(SIGN, TABLE1_VECTORS, TABLE1_P)


def _run_table1(jobs: int) -> Tuple[Dict, Dict, Dict]:
    sigma = table1_localization()
    M = sigma.base
    result = extend(sigma)
    realized = matroid_from_vectors(SIGN, {**TABLE1_VECTORS, "p": TABLE1_P})
    observed = {
        "base_cocircuits": sorted(str(Y) for Y in M.cocircuits),
        "is_localization": is_localization(sigma).passed,
        "rank2_test": rank2_localization_test(M, sigma),
        "extension_cocircuit_classes": len(result.cocircuits),
        "matches_realization": result.extended == realized,
        "round_trip": sigma_from_extension(M, result.extended, "p") == sigma,
        "deletion_recovers_base": deletion(result.extended, ["p"]) == M,
    }
    expected = {
        "base_cocircuits": ["(0, 1, 1)", "(1, 0, -1)", "(1, 1, 0)"],
        "is_localization": True,
        "rank2_test": True,
        "extension_cocircuit_classes": 4,
        "matches_realization": True,
        "round_trip": True,
        "deletion_recovers_base": True,
    }
    details = {"extension": result.to_dict(), "sigma": sigma.to_file()}
    return expected, observed, details


def _run_exam2(jobs: int) -> Tuple[Dict, Dict, Dict]:
    c = phase_constants()
    a, b, x, y, z = c["a"], c["b"], c["x"], c["y"], c["z"]
    one = PHASE.one
    w = PHASE.binary_sum(x * b, -(a * y))
    observed = {
        "x in 1 ⊞ a": hypersum_contains([one, a], x),
        "y in -1 ⊞ b": hypersum_contains([-one, b], y),
        "z in a ⊞ b": hypersum_contains([a, b], z),
        "z in x ⊞ y": hypersum_contains([x, y], z),
        "xb": str(x * b),
        "-ay": str(-(a * y)),
        "xb ⊞ -ay is a singleton": w.is_singleton(),
        "z in xb ⊞ -ay": hypersum_contains([x * b, -(a * y)], z),
    }
    expected = {
        "x in 1 ⊞ a": True,
        "y in -1 ⊞ b": True,
        "z in a ⊞ b": True,
        "z in x ⊞ y": True,
        "xb": "ph:5/24",
        "-ay": "ph:5/24",
        "xb ⊞ -ay is a singleton": True,
        "z in xb ⊞ -ay": False,
    }
    pc = check_pathetic_cancellation(PHASE, spec="roots:24")
    details = {"quintuple": [str(v) for v in (a, b, x, y, z)], "pathetic_cancellation_roots24": pc.model_dump(mode="json")}
    return expected, observed, details


U34_VECTORS = {"y1": (1, 0, 0), "y2": (0, 1, 0), "y3": (0, 0, 1), "y4": (1, 1, 1)}


def u34_sigmas(tract: Tract) -> List[Localization]:
    """Every σ on U_{3,4} over a tract whose units are ±1, one value in {0, 1, -1} per projective cocircuit"""
    M = matroid_from_vectors(tract, U34_VECTORS)
    choices = (tract.zero, tract.one, -tract.one)
    return [check_equivariance(M, dict(zip(M.cocircuits, values)), allow_zero=True)
            for values in product(choices, repeat=len(M.cocircuits))]


def sign_u34_sigmas() -> List[Localization]:
    """All 3^6 equivariant σ on the sign matroid U_{3,4}"""
    return u34_sigmas(SIGN)


def _run_sign_u34(jobs: int) -> Tuple[Dict, Dict, Dict]:
    sigmas = sign_u34_sigmas()
    logger.info("sweeping %d sign localizations of U_{3,4}", len(sigmas))
    verdicts = run_jobs([(str(i), lambda s=s: characterize(s, "weak")) for i, s in enumerate(sigmas)], jobs)
    disagreements = [s.to_file() for s, v in zip(sigmas, verdicts) if not v.agree]
    observed = {"sigma_count": len(sigmas), "disagreements": len(disagreements)}
    expected = {"sigma_count": 729, "disagreements": 0}
    details = {"localizations": sum(1 for v in verdicts if v.full), "first_disagreements": disagreements[:3]}
    return expected, observed, details


def _run_layered(jobs: int) -> Tuple[Dict, Dict, Dict]:
    t = layer(SIGN)
    spec = "layers:-3..3"
    verdicts = {
        "stringent": check_stringent(t, spec=spec),
        "pathetic_cancellation": check_pathetic_cancellation(t, spec=spec),
        "strong_pc": check_strong_pc(t, spec=spec),
    }
    observed = {name: v.holds for name, v in verdicts.items()}
    expected = {name: True for name in verdicts}
    details = {name: v.model_dump(mode="json") for name, v in verdicts.items()}
    return expected, observed, details


FIXTURES: Dict[str, Tuple[str, Callable[[int], Tuple[Dict, Dict, Dict]]]] = {
    "table2-counterexample": ("phased matroid whose σ passes every rank 2 contraction but is not a localization",
                              _run_counterexample),
    "table1-rank2": ("sign U_{2,3} with a localization and its four-class extension", _run_table1),
    "exam2-quintuple": ("phase quintuple violating Pathetic Cancellation", _run_exam2),
    "sign-u34": ("every equivariant σ on the sign matroid U_{3,4}", _run_sign_u34),
    "layered-window": ("S⋊Z on layers -3..3: stringent, Pathetic Cancellation and its strong form", _run_layered),
}


def run_fixture(name: str, jobs: int = 1) -> FixtureReport:
    if name not in FIXTURES:
        raise ParseError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURE_NAMES)}", position="--fixture")
    description, runner = FIXTURES[name]
    logger.info("reproducing fixture %s", name)
    expected, observed, details = runner(jobs)
    return FixtureReport(fixture=name, description=description, expected=expected, observed=observed, details=details)

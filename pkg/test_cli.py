"""
Command Line Test Suite
Subcommands end to end through main(): JSON reports on stdout and exit codes 0, 1 and 2
"""
import json

import pytest

from fixture_service import counterexample
from main import main

U23 = {
    "tract": {"kind": "sign"},
    "chirality": "left",
    "ground": ["e1", "e2", "e3"],
    "circuits": [{"e1": "1", "e2": "-1", "e3": "1"}],
}
U23_SIGMA = {"p": "p", "values": {"0;1;1": "1", "1;0;-1": "1", "1;1;0": "1"}}


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def u23(tmp_path):
    return write(tmp_path, "u23.json", U23), write(tmp_path, "sigma.json", U23_SIGMA)


@pytest.fixture
def counterexample_files(tmp_path):
    fx = counterexample()
    return (write(tmp_path, "phase.json", fx.matroid.to_dict()),
            write(tmp_path, "phase-sigma.json", fx.sigma.to_file()))


# ==============================================================================
# MATROID COMMANDS
# ==============================================================================

def test_validate(capsys, u23):
    code, report = run(capsys, "validate", "--matroid", u23[0])
    assert code == 0
    assert report["status"] == "pass"
    assert report["command"] == "validate"
    assert report["data"]["rank"] == 2
    assert report["data"]["orthogonality"]["passed"]


def test_validate_a_non_matroid(capsys, tmp_path):
    broken = dict(U23, circuits=[{"e1": "1", "e2": "1"}, {"e1": "1", "e2": "1", "e3": "1"}])
    code, report = run(capsys, "validate", "--matroid", write(tmp_path, "broken.json", broken))
    assert code == 1
    assert report["status"] == "fail"


def test_dual(capsys, u23):
    code, report = run(capsys, "dual", "--matroid", u23[0])
    assert code == 0
    assert report["data"]["matroid"]["chirality"] == "right"
    assert len(report["data"]["matroid"]["circuits"]) == 3


def test_minor(capsys, u23):
    code, report = run(capsys, "minor", "--matroid", u23[0], "--contract", "e1")
    assert code == 0
    assert report["data"]["matroid"]["ground"] == ["e2", "e3"]
    assert report["data"]["rank"] == 1


def test_rescale(capsys, tmp_path, u23):
    rho = write(tmp_path, "rho.json", {"values": {"e1": "-1"}})
    code, report = run(capsys, "rescale", "--matroid", u23[0], "--rho", rho)
    assert code == 0
    assert report["data"]["matroid"]["circuits"] == [{"e1": "1", "e2": "1", "e3": "-1"}]


def test_plucker(capsys, u23):
    code, report = run(capsys, "plucker", "--matroid", u23[0])
    assert code == 0
    assert len(report["data"]["values"]) == 6


# ==============================================================================
# LOCALIZATION COMMANDS
# ==============================================================================

def test_extend(capsys, u23):
    code, report = run(capsys, "extend", "--matroid", u23[0], "--sigma", u23[1])
    assert code == 0
    assert report["data"]["passed"]
    assert len(report["data"]["cocircuits"]) == 4
    assert report["data"]["extended"]["ground"] == ["e1", "e2", "e3", "p"]


def test_extend_refuses_the_counterexample(capsys, counterexample_files):
    code, report = run(capsys, "extend", "--matroid", counterexample_files[0], "--sigma", counterexample_files[1])
    assert code == 1
    assert report["data"]["extended"] is None


def test_check_localization(capsys, counterexample_files):
    code, report = run(capsys, "check-localization", "--matroid", counterexample_files[0],
                       "--sigma", counterexample_files[1])
    assert code == 1
    failed = [r["axiom"] for r in report["data"]["results"] if not r["passed"]]
    assert failed[0] == "P5"


def test_characterize_counterexample(capsys, counterexample_files):
    code, report = run(capsys, "characterize", "--matroid", counterexample_files[0],
                       "--sigma", counterexample_files[1], "--cross-check")
    assert code == 1
    assert report["data"]["triple"] == [False, True, True]
    assert report["data"]["modular_triple_criterion"]["results"][0]["passed"]


def test_characterize_localization(capsys, u23):
    code, report = run(capsys, "characterize", "--matroid", u23[0], "--sigma", u23[1], "--jobs", "2")
    assert code == 0
    assert report["data"]["triple"] == [True, True, True]


# ==============================================================================
# TRACT COMMANDS
# ==============================================================================

def test_check_tract_passes(capsys, tmp_path):
    tract = write(tmp_path, "sign.json", {"tract": {"kind": "sign"}})
    code, report = run(capsys, "check-tract", "--tract", tract, "--property", "pathetic-cancellation")
    assert code == 0
    assert report["data"]["holds"]


def test_check_tract_reports_a_witness(capsys, tmp_path):
    tract = write(tmp_path, "phase.json", {"tract": {"kind": "phase"}, "sample": "ph:0;ph:1/4"})
    code, report = run(capsys, "check-tract", "--tract", tract, "--property", "stringent")
    assert code == 1
    assert report["data"]["witness"] == ["ph:0", "ph:1/4"]


# ==============================================================================
# FIXTURES AND INPUT ERRORS
# ==============================================================================

def test_repro_counterexample(capsys):
    code, report = run(capsys, "repro", "--fixture", "table2-counterexample")
    assert code == 0
    assert report["data"]["mismatches"] == {}
    assert report["data"]["fixtures"][0]["observed"]["failing_axiom"] == "P5"


def test_output_is_deterministic(capsys, counterexample_files):
    argv = ["check-localization", "--matroid", counterexample_files[0], "--sigma", counterexample_files[1]]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_malformed_json(capsys, tmp_path):
    code, report = run(capsys, "validate", "--matroid", write(tmp_path, "bad.json", '{"tract": {"kind": "sign"'))
    assert code == 2
    assert report["status"] == "error"
    assert report["error_type"] == "ValidationError"
    assert report["position"]


def test_schema_errors_name_the_field(capsys, tmp_path):
    code, report = run(capsys, "validate", "--matroid", write(tmp_path, "bad.json", dict(U23, ground=[])))
    assert code == 2
    assert report["position"] == "ground"


def test_bad_values_name_their_position(capsys, tmp_path):
    bad = dict(U23, circuits=[{"e1": "1", "e2": "2"}])
    code, report = run(capsys, "validate", "--matroid", write(tmp_path, "bad.json", bad))
    assert code == 2
    assert report["error_type"] == "ParseError"
    assert report["position"] == "circuits[0]"


def test_missing_file(capsys, tmp_path):
    missing = str(tmp_path / "nowhere.json")
    code, report = run(capsys, "validate", "--matroid", missing)
    assert code == 2
    assert report["position"] == missing


def test_sigma_for_another_matroid(capsys, u23, counterexample_files):
    code, report = run(capsys, "extend", "--matroid", u23[0], "--sigma", counterexample_files[1])
    assert code == 2
    assert report["status"] == "error"


def test_service_reads_its_environment(monkeypatch):
    from check_service import CheckService

    monkeypatch.setenv("TRACT_MATROIDS_JOBS", "3")
    monkeypatch.setenv("TRACT_MATROIDS_FAMILY_CAP", "4")
    monkeypatch.setenv("TRACT_MATROIDS_DEBUG", "true")
    service = CheckService()
    assert (service.jobs, service.family_cap, service.debug) == (3, 4, True)


def test_malformed_environment_setting(capsys, monkeypatch):
    from check_service import CheckService
    import main as cli

    monkeypatch.setenv("TRACT_MATROIDS_JOBS", "four")
    monkeypatch.setattr(cli, "check_service", CheckService())
    code, report = run(capsys, "repro", "--fixture", "exam2-quintuple")
    assert code == 2
    assert report["error_type"] == "ParseError"
    assert report["position"] == "TRACT_MATROIDS_JOBS"

"""
Characterization Test Suite
The three localization verdicts, their agreement on sign matroids and the concurrent job runner
"""
import pytest

from extensions import characterize, is_covered, rank2_contractions, rank2_minors3, run_jobs
from fixture_service import counterexample, sign_u34_sigmas, table1_localization, u34_sigmas
from tracts import SIGN, PrimeField


@pytest.fixture(scope="module")
def fx():
    return counterexample()


@pytest.fixture(scope="module")
def u34_sample():
    return sign_u34_sigmas()[::27]


def test_counterexample_verdicts(fx):
    verdict = characterize(fx.sigma)
    assert verdict.as_tuple() == (False, True, True)
    assert not verdict.agree
    assert verdict.failing_contractions == []


def test_triangle_verdicts():
    verdict = characterize(table1_localization())
    assert verdict.as_tuple() == (True, True, True)
    assert verdict.covered


def test_contractions_are_by_rank_one_flats(fx):
    contractions = rank2_contractions(fx.sigma)
    assert sorted(sorted(A) for A, _ in contractions) == [["y1"], ["y2"], ["y3"], ["y4"]]
    assert all(s.base.rank == 2 for _, s in contractions)


def test_three_element_minors(fx):
    minors = rank2_minors3(fx.sigma)
    assert len(minors) == 4
    assert all(len(s.base.ground) == 3 and s.base.rank == 2 for _, s in minors)
    assert minors[0][0] == "/{y1} on {y2,y3,y4}"


def test_rank_one_has_nothing_to_contract():
    from extensions import check_equivariance
    from matroids import matroid_from_vectors

    M = matroid_from_vectors(SIGN, {"a": (1,), "b": (-1,)})
    sigma = check_equivariance(M, {Y: SIGN.one for Y in M.cocircuits})
    verdict = characterize(sigma)
    assert verdict.rank2_contractions and verdict.rank2_minors3
    assert verdict.notes


def test_sign_verdicts_agree(u34_sample):
    for sigma in u34_sample:
        assert characterize(sigma).agree, sigma


def test_gf3_verdicts_agree():
    sigmas = u34_sigmas(PrimeField(3))
    assert len(sigmas) == 729
    for sigma in sigmas[::27]:
        assert characterize(sigma).agree, sigma.to_file()


def test_parallel_jobs_keep_order(u34_sample):
    serial = [characterize(s) for s in u34_sample]
    parallel = run_jobs([(str(i), lambda s=s: characterize(s)) for i, s in enumerate(u34_sample)], limit=4)
    assert parallel == serial


def test_parallel_verdict_matches_serial(fx):
    assert characterize(fx.sigma, jobs=4) == characterize(fx.sigma, jobs=1)


def test_strong_verdicts_over_phases_are_not_covered(fx):
    verdict = characterize(fx.sigma, "strong")
    assert not verdict.covered
    assert not is_covered(fx.sigma)


def test_strong_verdicts_over_signs_are_covered():
    verdict = characterize(table1_localization(), "strong")
    assert verdict.covered
    assert verdict.as_tuple() == (True, True, True)

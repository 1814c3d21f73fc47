"""
Extension Test Suite
Equivariance, extended coordinates, modular-elimination cocircuits, extensions of realizable configurations
and the rank 2 test
"""
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

import extensions.extension as extension_module
from errors import EliminationPreconditionError, ExtensionError, LocalizationError, NotALocalizationError, ParseError
from extensions import (
    check_equivariance, elimination_defect, extend, extended_bases, extended_cocircuits, extended_qp,
    find_elimination_triple, is_localization, mod_cocircuit, modular_triple_criterion, rank2_localization_test,
    scale_sigma, sigma_from_extension, verify_elimination_triple,
)
from fixture_service import (
    U34_VECTORS, contraction_triples, counterexample, expected_mod_cocircuits, table1_localization, table3_rows,
    u34_sigmas,
)
from matroids import (
    RescalingMap, TVector, canonical, check_qp_axioms, deletion, extension_sigma, induce_sigma, matroid_from_vectors,
    qp_from_circuits, qp_minor, rescale,
)
from tracts import PHASE, SIGN, PrimeField, TractValue, is_null

GF3 = PrimeField(3)
LINE_VECTORS = {"1": (1, 0, 0), "2": (0, 1, 0), "3": (1, 1, 0), "4": (0, 0, 1), "5": (1, 2, 1)}


@pytest.fixture(scope="module")
def fx():
    return counterexample()


def sigma_values(fx, **overrides):
    """The counterexample σ keyed by row vectors, with some values replaced"""
    c = fx.constants
    one = PHASE.one
    values = {"Y23": one, "Y13": one, "Y12": -one, "Y24": c["x"], "Y34": c["y"], "Y14": c["z"]}
    values.update(overrides)
    return {fx.rows[name]: v for name, v in values.items()}


# ==============================================================================
# EQUIVARIANCE
# ==============================================================================

def test_values_follow_scaling(fx):
    sigma = fx.sigma
    alpha = PHASE.value("ph:1/6")
    for Y in fx.rows.values():
        assert sigma(Y.scale(alpha, "right")) == sigma(Y) * alpha
    assert sigma(fx.rows["Y14"]) == fx.constants["z"]


def test_keys_may_be_vector_ids(fx):
    raw = {Y.vector_id(): str(v) for Y, v in sigma_values(fx).items()}
    assert check_equivariance(fx.matroid, raw) == fx.sigma


def test_conflicting_values(fx):
    raw = sigma_values(fx)
    raw[fx.rows["Y23"].scale(PHASE.value("ph:1/2"), "right")] = PHASE.one
    with pytest.raises(LocalizationError):
        check_equivariance(fx.matroid, raw)


def test_missing_values(fx):
    raw = sigma_values(fx)
    del raw[fx.rows["Y34"]]
    with pytest.raises(LocalizationError):
        check_equivariance(fx.matroid, raw)


def test_keys_must_be_cocircuits(fx):
    raw = sigma_values(fx)
    raw[TVector(fx.matroid.ground, PHASE, [PHASE.one] * 4)] = PHASE.one
    with pytest.raises(LocalizationError):
        check_equivariance(fx.matroid, raw)


def test_zero_localization_needs_permission(fx):
    zeros = {Y: PHASE.zero for Y in sigma_values(fx)}
    with pytest.raises(LocalizationError):
        check_equivariance(fx.matroid, zeros)
    assert check_equivariance(fx.matroid, zeros, allow_zero=True).is_zero()


def test_new_element_must_be_new(fx):
    with pytest.raises(LocalizationError):
        check_equivariance(fx.matroid, sigma_values(fx), p="y1")


def test_malformed_keys_name_their_position(fx):
    with pytest.raises(ParseError) as info:
        check_equivariance(fx.matroid, {"ph:0;0": "1"})
    assert info.value.position == "values[ph:0;0]"


def test_evaluating_a_non_cocircuit(fx):
    with pytest.raises(LocalizationError):
        fx.sigma(TVector(fx.matroid.ground, PHASE, [PHASE.one] * 4))


# ==============================================================================
# EXTENDED BASES AND COORDINATES
# ==============================================================================

def test_every_triple_is_an_extended_basis(fx):
    assert len(extended_bases(fx.sigma)) == 10


def test_zero_values_drop_bases(fx):
    sigma = check_equivariance(fx.matroid, sigma_values(fx, Y23=PHASE.zero))
    assert frozenset({"y2", "y3", "p"}) not in extended_bases(sigma)
    assert len(extended_bases(sigma)) == 9


def test_coordinate_through_the_new_element(fx):
    Q = extended_qp(fx.sigma)
    assert Q.bracket({"y2", "y3"}, "p", "y1") == PHASE.one
    assert Q.bracket({"y2", "y3"}, "y1", "p") == PHASE.one


def test_coordinates_avoiding_the_new_element_are_unchanged(fx):
    base = qp_from_circuits(fx.matroid)
    Q = extended_qp(fx.sigma)
    for (B1, B2), v in base.values.items():
        assert Q[(B1, B2)] == v


@settings(max_examples=23, deadline=None)
@given(st.integers(1, 23))
def test_coordinates_ignore_the_cocircuit_representative(fx, k):
    alpha = PHASE.value(f"ph:{k}/24")
    expected_qp = extended_qp(fx.sigma)
    expected_candidates = [X for X, _ in extended_cocircuits(fx.sigma)]
    original = extension_module._hyperplane_cocircuit
    with pytest.MonkeyPatch.context() as mp:
        mp.setattr(extension_module, "_hyperplane_cocircuit", lambda M, F: original(M, F).scale(alpha, fx.sigma.side))
        assert extended_qp(fx.sigma) == expected_qp
        assert [X for X, _ in extended_cocircuits(fx.sigma)] == expected_candidates


def test_sign_coordinates_ignore_the_cocircuit_representative(monkeypatch):
    sigma = table1_localization()
    expected = extended_qp(sigma)
    original = extension_module._hyperplane_cocircuit
    monkeypatch.setattr(extension_module, "_hyperplane_cocircuit", lambda M, F: -original(M, F))
    assert extended_qp(sigma) == expected
    assert check_qp_axioms(extended_qp(sigma)).passed


@pytest.mark.parametrize("build", [
    lambda: counterexample().matroid,
    lambda: table1_localization().base,
    lambda: matroid_from_vectors(GF3, U34_VECTORS),
    lambda: matroid_from_vectors(SIGN, LINE_VECTORS),
], ids=["phase-u34", "sign-u23", "gf3-u34", "sign-line"])
def test_every_hyperplane_has_a_cocircuit(build):
    M = build()
    everything = frozenset(M.ground.labels)
    hyperplanes = M.underlying.hyperplanes()
    for H in hyperplanes:
        assert M.cocircuit_with_support(everything - H) is not None, sorted(H)
    assert len(M.cocircuits) == len(hyperplanes)


def test_counterexample_coordinates_fail_p5(fx):
    report = is_localization(fx.sigma)
    assert not report.passed
    assert report.first_failure().axiom == "P5"
    assert report.result("B").passed
    assert report.result("P3").passed


def test_not_a_localization_cannot_be_extended(fx):
    with pytest.raises(NotALocalizationError) as info:
        extend(fx.sigma)
    assert info.value.report.first_failure().axiom == "P5"


# ==============================================================================
# MODULAR-ELIMINATION COCIRCUITS
# ==============================================================================

def test_three_modular_cocircuits(fx):
    rows = fx.rows
    expected = expected_mod_cocircuits(fx)
    assert mod_cocircuit(fx.sigma, rows["Y23"], rows["Y12"]) == expected["Y1"]
    assert mod_cocircuit(fx.sigma, -rows["Y23"], rows["Y13"]) == expected["Y2"]
    assert mod_cocircuit(fx.sigma, rows["Y13"], rows["Y12"]) == expected["Z"]


def test_modular_cocircuit_support_is_the_union(fx):
    rows = fx.rows
    X = mod_cocircuit(fx.sigma, rows["Y23"], rows["Y12"])
    assert X.support() == rows["Y23"].support() | rows["Y12"].support()
    assert X["p"].is_zero


def test_modular_cocircuits_are_not_eliminable(fx):
    mods = expected_mod_cocircuits(fx)
    at, terms = elimination_defect(mods["Y1"], mods["Y2"], mods["Z"])
    assert at == "y4"
    assert [str(t) for t in terms] == ["ph:17/24", "ph:17/24", "ph:1/4"]
    assert not is_null(terms)


def test_mod_needs_opposite_values(fx):
    with pytest.raises(EliminationPreconditionError):
        mod_cocircuit(fx.sigma, fx.rows["Y23"], fx.rows["Y13"])


def test_mod_needs_a_modular_pair(fx):
    with pytest.raises(EliminationPreconditionError):
        mod_cocircuit(fx.sigma, fx.rows["Y23"], -fx.rows["Y23"])


def _line_pair():
    """σ on five points with 1, 2, 3 collinear, and a modular pair meeting in {1} with two choices of e1"""
    sigma = extension_sigma(SIGN, LINE_VECTORS, (1, 3, 7))
    M = sigma.base
    Y1 = M.cocircuit_with_support({"4", "5"})
    Y2 = M.cocircuit_with_support({"2", "3", "5"})
    return sigma, Y1, Y2.scale(-(sigma(Y2).inv() * sigma(Y1)), sigma.side)


def test_mod_is_the_same_for_either_choice_of_e1(monkeypatch):
    monkeypatch.setenv("TRACT_MATROIDS_DEBUG", "true")
    sigma, Y1, Y2 = _line_pair()
    X = mod_cocircuit(sigma, Y1, Y2)
    assert X == mod_cocircuit(sigma, Y1, Y2, reverse_choice=True)
    assert X.support() == Y1.support() | Y2.support()


def test_debug_cross_check_raises_when_e1_matters(monkeypatch):
    monkeypatch.delenv("TRACT_MATROIDS_DEBUG", raising=False)
    sigma, Y1, Y2 = _line_pair()
    wrong = sigma.base.cocircuit_with_support({"1", "2", "3"})
    monkeypatch.setattr(extension_module, "_hyperplane_cocircuit", lambda M, F: wrong)
    mod_cocircuit(sigma, Y1, Y2)
    monkeypatch.setenv("TRACT_MATROIDS_DEBUG", "true")
    with pytest.raises(ExtensionError) as info:
        mod_cocircuit(sigma, Y1, Y2)
    assert info.value.witness[:2] == ("2", "3")


def test_lifts_are_candidate_cocircuits(fx):
    candidates = {X for X, _ in extended_cocircuits(fx.sigma)}
    for name, row in table3_rows(fx).items():
        assert canonical(row, "right") in candidates, name


def test_candidate_provenance(fx):
    tags = [tag for _, tag in extended_cocircuits(fx.sigma)]
    assert sum(tag.startswith("lifted") for tag in tags) == 6
    assert any(tag.startswith("modular") for tag in tags)


# ==============================================================================
# RANK 2 TEST
# ==============================================================================

@pytest.mark.parametrize("label", ["y1", "y2", "y3", "y4"])
def test_every_contraction_has_a_null_triple(fx, label):
    Y1, Y2, Y3, e, _ = contraction_triples(fx)[label]
    induced = induce_sigma(fx.sigma, [label], "contract")
    eliminates, terms = verify_elimination_triple(induced, Y1, Y2, Y3, e)
    assert eliminates
    assert is_null(terms)
    assert rank2_localization_test(induced.base, induced)


def test_perturbed_value_fails_the_rank2_test(fx):
    sigma = check_equivariance(fx.matroid, sigma_values(fx, Y24=PHASE.value("ph:7/8")))
    induced = induce_sigma(sigma, ["y2"], "contract")
    assert not rank2_localization_test(induced.base, induced)
    assert find_elimination_triple(induced.base, induced) is None


def test_rank2_test_needs_a_triangle(fx):
    with pytest.raises(ExtensionError):
        find_elimination_triple(fx.matroid, fx.sigma)


def test_rank2_test_on_realizable_sign_triangle():
    sigma = table1_localization()
    assert rank2_localization_test(sigma.base, sigma)
    assert is_localization(sigma).passed


def test_modular_triple_criterion_misses_the_counterexample(fx):
    assert modular_triple_criterion(fx.sigma).passed
    assert not is_localization(fx.sigma).passed


@pytest.mark.parametrize("tract", [SIGN, GF3], ids=lambda t: t.name)
def test_modular_triple_criterion_decides_u34_localizations(tract):
    sigmas = u34_sigmas(tract)
    assert len(sigmas) == 729
    for sigma in sigmas:
        assert modular_triple_criterion(sigma).passed == is_localization(sigma).passed, sigma.to_file()


# ==============================================================================
# EXTENSIONS
# ==============================================================================

def test_sign_triangle_extension():
    sigma = table1_localization()
    result = extend(sigma)
    assert len(result.cocircuits) == 4
    assert result.extended == matroid_from_vectors(SIGN, {"e1": (1, 0), "e2": (0, 1), "e3": (-1, 1), "p": (1, 1)})
    assert deletion(result.extended, ["p"]) == sigma.base
    assert result.extended_qp == qp_from_circuits(result.extended)
    assert check_qp_axioms(result.extended_qp).passed
    assert {entry["from"].split("(")[0] for entry in result.to_dict()["cocircuits"]} == {"lifted", "modular"}


def test_deleting_the_new_element_recovers_the_base_coordinates():
    sigma = table1_localization()
    assert qp_minor(extended_qp(sigma), ["p"], "delete") == qp_from_circuits(sigma.base)


def test_sigma_from_a_coloop_extension():
    base = matroid_from_vectors(SIGN, {"e1": (1, 0, 0), "e2": (0, 1, 0), "e3": (-1, 1, 0)})
    extended = matroid_from_vectors(SIGN, {"e1": (1, 0, 0), "e2": (0, 1, 0), "e3": (-1, 1, 0), "p": (0, 0, 1)})
    with pytest.raises(ExtensionError):
        sigma_from_extension(base, extended)


def test_sigma_from_an_extension_without_the_element():
    sigma = table1_localization()
    with pytest.raises(ExtensionError):
        sigma_from_extension(sigma.base, sigma.base, "q")


def _combination(columns, coefficients):
    return tuple(sum(c * v[i] for c, v in zip(coefficients, columns)) for i in range(3))


def _nonzero(vector, tract) -> bool:
    if isinstance(tract, PrimeField):
        return any(x % tract.p for x in vector)
    return any(vector)


realizable = st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=n, max_size=n),
    st.lists(st.integers(-2, 2), min_size=n, max_size=n),
))


@pytest.mark.parametrize("tract", [SIGN, GF3], ids=lambda t: t.name)
@settings(max_examples=50, deadline=None)
@given(data=realizable)
def test_realizable_extensions_round_trip(tract, data):
    columns, coefficients = data
    p_vector = _combination(columns, coefficients)
    assume(_nonzero(p_vector, tract))
    vectors = {f"e{i + 1}": c for i, c in enumerate(columns)}
    sigma = extension_sigma(tract, vectors, p_vector)
    result = extend(sigma)
    realized = matroid_from_vectors(tract, {**vectors, "p": p_vector})
    assert result.extended == realized
    assert set(result.cocircuits) == set(realized.cocircuits)
    assert sigma_from_extension(sigma.base, result.extended) == sigma
    assert deletion(result.extended, ["p"]) == sigma.base


@pytest.mark.parametrize("tract, alpha", [(SIGN, "-1"), (GF3, "2")], ids=["sign", "gf3"])
@settings(max_examples=30, deadline=None)
@given(data=realizable)
def test_scaling_sigma_rescales_the_extension(tract, alpha, data):
    columns, coefficients = data
    p_vector = _combination(columns, coefficients)
    assume(_nonzero(p_vector, tract))
    sigma = extension_sigma(tract, {f"e{i + 1}": c for i, c in enumerate(columns)}, p_vector)
    _assert_scaling_rescales(sigma, tract.value(alpha))


@settings(max_examples=11, deadline=None)
@given(st.integers(1, 11))
def test_scaling_phase_sigma_rescales_the_extension(k):
    sigma = extension_sigma(PHASE, U34_VECTORS, (1, -1, 2))
    _assert_scaling_rescales(sigma, TractValue(PHASE, Fraction(k, 12)))


def _assert_scaling_rescales(sigma, alpha):
    extended = extend(sigma).extended
    rho = RescalingMap(extended.ground, {e: alpha if e == sigma.p else sigma.tract.one for e in extended.ground})
    assert extend(scale_sigma(sigma, alpha)).extended == rescale(extended, rho)

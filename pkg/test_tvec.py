"""
Tract Vector Test Suite
Supports, scalar actions, vector hypersums and orthogonality
"""
import pytest

from errors import ParseError, TractMismatchError
from matroids import GroundSet, TVector, orthogonality, scale, sum_contains, support
from tracts import D6, PHASE, SIGN

Y_LABELS = GroundSet(["y1", "y2", "y3", "y4"])
E3 = GroundSet(["e1", "e2", "e3"])


def vec(ground, tract, *texts):
    return TVector(ground, tract, [tract.value(t) for t in texts])


# ==============================================================================
# SUPPORTS
# ==============================================================================

def test_support_of_a_table_row():
    Y23 = vec(Y_LABELS, PHASE, "1", "0", "0", "1")
    assert support(Y23) == (frozenset({"y1", "y4"}), frozenset({"y2", "y3"}))


def test_zero_vector_has_empty_support():
    Z = TVector.zero(Y_LABELS, PHASE)
    assert Z.support() == frozenset()
    assert Z.first_support() is None


def test_support_with_phase_entries():
    Y14 = vec(Y_LABELS, PHASE, "0", "ph:1/8", "ph:7/8", "0")
    assert Y14.support() == {"y2", "y3"}


# ==============================================================================
# SCALAR ACTIONS
# ==============================================================================

def test_sign_scaling():
    assert scale(vec(E3, SIGN, "1", "0", "-1"), SIGN.value("-1")) == vec(E3, SIGN, "-1", "0", "1")


def test_phase_left_scaling():
    X = vec(GroundSet(["a", "b"]), PHASE, "ph:0", "ph:1/4")
    assert [str(v) for v in X.scale(PHASE.value("ph:1/2"), "left").entries] == ["ph:1/2", "ph:3/4"]


def test_left_and_right_scaling_differ_in_d6():
    X = vec(GroundSet(["a"]), D6, "s")
    r = D6.value("r")
    assert X.scale(r, "left") != X.scale(r, "right")


def test_scaling_keeps_support():
    X = vec(Y_LABELS, PHASE, "0", "ph:1/8", "ph:7/8", "0")
    assert X.scale(PHASE.value("ph:1/3"), "right").support() == X.support()


def test_scaling_by_zero_is_rejected():
    with pytest.raises(ValueError):
        vec(E3, SIGN, "1", "0", "-1").scale(SIGN.zero)


# ==============================================================================
# VECTOR HYPERSUMS
# ==============================================================================

def test_sign_vector_sum():
    assert sum_contains(vec(E3, SIGN, "1", "1", "-1"), vec(E3, SIGN, "0", "1", "1"), vec(E3, SIGN, "1", "1", "0"))


def test_adding_zero():
    X = vec(E3, SIGN, "1", "0", "-1")
    assert sum_contains(X, TVector.zero(E3, SIGN), X)


def test_idempotent_sign_sum():
    X = vec(E3, SIGN, "1", "0", "0")
    assert sum_contains(X, X, X)
    assert not sum_contains(X, X, -X)


def test_sum_is_symmetric():
    X, Y, Z = vec(E3, SIGN, "1", "1", "-1"), vec(E3, SIGN, "0", "1", "1"), vec(E3, SIGN, "1", "1", "0")
    assert sum_contains(X, Y, Z) == sum_contains(Y, X, Z)


def test_ground_mismatch():
    with pytest.raises(TractMismatchError):
        sum_contains(vec(E3, SIGN, "1", "0", "0"), vec(E3, SIGN, "1", "0", "0"), TVector.zero(Y_LABELS, SIGN))


# ==============================================================================
# ORTHOGONALITY
# ==============================================================================

def test_sign_orthogonality():
    product, orthogonal = orthogonality(vec(E3, SIGN, "1", "1", "0"), vec(E3, SIGN, "1", "-1", "0"))
    assert sorted(map(str, product)) == ["-1", "1"]
    assert orthogonal


def test_disjoint_supports_are_orthogonal():
    product, orthogonal = orthogonality(vec(E3, SIGN, "1", "0", "0"), vec(E3, SIGN, "0", "1", "1"))
    assert len(product) == 0
    assert orthogonal


def test_phase_orthogonality_conjugates_the_second_vector():
    ground = GroundSet(["a", "b"])
    product, orthogonal = orthogonality(vec(ground, PHASE, "ph:0", "ph:0"), vec(ground, PHASE, "ph:1/8", "ph:5/8"))
    assert sorted(map(str, product)) == ["ph:3/8", "ph:7/8"]
    assert orthogonal


def test_left_scaling_scales_the_product():
    ground = GroundSet(["a", "b"])
    X, Y = vec(ground, PHASE, "ph:1/3", "ph:0"), vec(ground, PHASE, "ph:1/8", "ph:1/4")
    alpha = PHASE.value("ph:1/6")
    scaled, _ = orthogonality(X.scale(alpha, "left"), Y)
    product, _ = orthogonality(X, Y)
    assert scaled == product.left(alpha)


# ==============================================================================
# SERIALIZATION
# ==============================================================================

def test_vector_ids():
    X = vec(Y_LABELS, PHASE, "1", "0", "0", "ph:1/8")
    assert X.vector_id() == "ph:0;0;0;ph:1/8"
    assert TVector.from_id(Y_LABELS, PHASE, X.vector_id()) == X
    assert X.to_dict() == {"y1": "ph:0", "y2": "0", "y3": "0", "y4": "ph:1/8"}


def test_mapping_rejects_unknown_labels():
    with pytest.raises(ParseError):
        TVector.from_mapping(Y_LABELS, PHASE, {"y1": "1", "y5": "1"})


def test_ground_labels_are_unique():
    with pytest.raises(ParseError):
        GroundSet(["a", "a"])

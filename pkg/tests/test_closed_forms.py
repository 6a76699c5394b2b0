from __future__ import annotations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from naive import naive_distribution
from strategies import face_pairs
from quatcodes.bounds import griesmer_min_length
from quatcodes.closed_forms import (
    FAMILIES,
    AdmissibilityError,
    TheoremPrediction,
    admissible,
    binary_product_complement,
    binary_product_punctured,
    binary_shared_complement,
    binary_shared_dual_check,
    binary_shared_punctured,
    cube_product_punctured,
    diff_distributions,
    family_for,
    oracle_set,
    product_complement,
    product_punctured,
    shared_complement,
    shared_complement_special,
    shared_punctured,
    shared_punctured_special,
    special_case,
    with_zero_coordinate,
)
from quatcodes.defining_sets import product_set, puncture_zero
from quatcodes.engine import weight_distribution_bruteforce
from quatcodes.simplicial import SimplicialComplex


def dist(pred: TheoremPrediction) -> dict[int, int]:
    return {w: c for w, c in pred.distribution.items() if w}


# values frozen from the naive scalar oracle in tests/naive.py
FROZEN = [
    (product_punctured, {1}, {1}, 2, (3, 1, {3: 3})),
    (product_complement, {1}, {1}, 2, (12, 2, {9: 12, 12: 3})),
    (shared_punctured, {1, 2}, {2, 3}, 4, (35, 3, {20: 6, 27: 48, 28: 6, 32: 3})),
    (shared_punctured, {1, 2}, {3, 4}, 4, (48, 4, {24: 18, 30: 12, 36: 90, 38: 108, 40: 27})),
    (shared_punctured, {1}, {2}, 2, (8, 2, {5: 6, 7: 6, 8: 3})),
    (shared_complement, {1, 2}, {2, 3}, 3, (28, 3, {16: 3, 20: 6, 21: 48, 28: 6})),
    (shared_complement, {1}, {2}, 3, (55, 3, {40: 12, 41: 24, 43: 24, 48: 3})),
    (binary_product_punctured, {1, 2, 3}, {3, 4}, 4, (31, 5, {16: 31})),
    (binary_product_punctured, {1}, set(), 1, (1, 1, {1: 1})),
    (binary_product_punctured, {1}, {1}, 1, (3, 2, {2: 3})),
    (binary_product_complement, {1}, {1}, 2, (12, 4, {6: 12, 8: 3})),
    (binary_product_complement, {1, 2}, {3}, 3, (56, 6, {28: 56, 32: 7})),
    (binary_shared_punctured, {1, 2}, {2, 3}, 4, (35, 6, {12: 4, 16: 5, 18: 48, 20: 4, 24: 2})),
    (binary_shared_punctured, {1}, {2}, 2, (8, 4, {3: 4, 4: 5, 5: 4, 6: 2})),
    (binary_shared_punctured, {1, 2}, {3, 4}, 4, (48, 8, {14: 12, 20: 36, 24: 81, 26: 108, 28: 18})),
    (binary_shared_complement, {1, 2}, {2, 3}, 3, (28, 6, {8: 2, 12: 4, 14: 48, 16: 5, 20: 4})),
]


@pytest.mark.parametrize("fn,A,B,m,expected", FROZEN, ids=lambda x: getattr(x, "__name__", None))
def test_frozen_values(fn, A, B, m, expected):
    pred = fn(A, B, m)
    assert (pred.n, pred.k, dist(pred)) == expected


@pytest.mark.parametrize("fn,A,B,m,expected", FROZEN[:6], ids=lambda x: getattr(x, "__name__", None))
def test_frozen_values_against_naive_oracle(fn, A, B, m, expected):
    name = next(k for k, f in FAMILIES.items() if f.predict is fn)
    n, d = naive_distribution(oracle_set(name, _mask(A), _mask(B), m))
    assert (n, {w: c for w, c in d.items() if w}) == (expected[0], expected[2])


def _mask(face):
    return sum(1 << (i - 1) for i in face)


def test_single_and_two_weight_products():
    assert dist(product_punctured({1, 2, 3}, {3, 4}, 4)) == {16: 21, 24: 234}
    assert dist(product_punctured({2, 3}, {3, 4}, 4)) == {8: 9, 12: 54}
    assert dist(product_complement({1, 2, 3}, {3, 4}, 4)) == {168: 234, 176: 21}
    assert dist(product_complement({2, 3}, {3, 4}, 4)) == {180: 216, 184: 36, 192: 3}


def test_cube_products():
    assert dist(cube_product_punctured({1}, 2)) == {4: 3, 6: 12}
    assert dist(cube_product_punctured(set(), 3)) == {4: 21, 6: 42}
    full = cube_product_punctured({1, 2, 3}, 3)
    assert dist(full) == {48: 63}


@given(face_pairs(max_m=5))
def test_cube_product_is_product_with_full_face(pair):
    A, _, m = pair
    full = (1 << m) - 1
    cube = cube_product_punctured(A, m)
    assert cube.distribution == product_punctured(full, A, m).distribution == product_punctured(A, full, m).distribution


@given(st.sampled_from(sorted(FAMILIES)), face_pairs(max_m=4))
def test_prediction_matches_oracle(name, pair):
    A, B, m = pair
    family = FAMILIES[name]
    assume(admissible(family, A, B, m))
    pred = family.predict(A, B, m)
    observed = weight_distribution_bruteforce(oracle_set(name, A, B, m))
    assert diff_distributions(pred.to_weight_distribution(), observed) == []


@given(st.sampled_from(sorted(FAMILIES)), face_pairs(max_m=9))
def test_total_count_identity(name, pair):
    A, B, m = pair
    family = FAMILIES[name]
    assume(admissible(family, A, B, m))
    pred = family.predict(A, B, m)
    assert sum(pred.distribution.values()) == pred.q**pred.k
    assert all(c > 0 for c in pred.distribution.values())
    assert pred.flags["total_ok"]


@given(face_pairs(max_m=6, incomparable=True))
def test_special_cases_agree_with_general(pair):
    A, B, m = pair
    try:
        special_case(A, B, m)
    except AdmissibilityError:
        return
    assert shared_punctured_special(A, B, m).distribution == shared_punctured(A, B, m).distribution
    assert shared_complement_special(A, B, m).distribution == shared_complement(A, B, m).distribution


@given(face_pairs(max_m=8))
def test_griesmer_identity(pair):
    A, B, m = pair
    if bin(A).count("1") == bin(B).count("1") == m:
        return
    for pred in (product_complement(A, B, m), binary_product_complement(A, B, m)):
        assert griesmer_min_length(pred.k, pred.d, pred.q) == pred.n
        assert pred.flags["griesmer_code"]


def test_literal_mode_differs_on_known_rows():
    # equal-size differences: the repeated factor coincides with the correct one
    assert binary_shared_punctured({1, 2}, {2, 3}, 4, literal=True).distribution == binary_shared_punctured({1, 2}, {2, 3}, 4).distribution
    for fn in (binary_shared_punctured, binary_shared_complement):
        assert fn({1}, {2, 3}, 3, literal=True).distribution != fn({1}, {2, 3}, 3).distribution
    for fn in (shared_punctured_special, shared_complement_special):
        assert fn({1, 2}, {2, 3}, 3, literal=True).distribution != fn({1, 2}, {2, 3}, 3).distribution
        assert fn({1, 2}, {3, 4}, 4, literal=True).distribution != fn({1, 2}, {3, 4}, 4).distribution


def test_literal_mode_skips_total_check():
    pred = binary_shared_punctured({1}, {2, 3}, 3, literal=True)
    assert pred.flags["literal"]
    assert not pred.flags["total_ok"]


def test_special_case_labels():
    assert special_case({1}, {2}, 2) == "i"
    assert special_case({1, 2}, {3, 4}, 4) == "ii"
    assert special_case({1, 2}, {2, 3}, 3) == "iii"
    with pytest.raises(AdmissibilityError):
        special_case({1, 2, 3}, {3, 4}, 4)
    assert dist(shared_punctured_special({1}, {2}, 2)) == {5: 6, 7: 6, 8: 3}


@pytest.mark.parametrize(
    "call",
    [
        lambda: product_punctured(set(), set(), 2),
        lambda: binary_product_punctured(set(), set(), 2),
        lambda: product_complement({1, 2}, {1, 2}, 2),
        lambda: binary_product_complement({1}, {1}, 1),
        lambda: shared_punctured({1}, {1, 2}, 3),
        lambda: shared_complement({1, 2}, {1, 2}, 3),
        lambda: binary_shared_punctured(set(), {1}, 2),
        lambda: binary_shared_dual_check({1}, {1, 2}, 3),
    ],
)
def test_admissibility_guards(call):
    with pytest.raises(AdmissibilityError):
        call()


def test_faces_must_fit():
    with pytest.raises(ValueError):
        product_punctured({5}, {1}, 4)


def test_dual_check_example():
    r = binary_shared_dual_check({1, 2}, {2, 3}, 4)
    assert (r.n, r.k, r.d) == (35, 29, 3)
    assert r.sphere_lhs == 1 + 35 + 595
    assert r.sphere_rhs == 64
    assert r.almost_optimal
    assert binary_shared_dual_check({1, 2}, {2, 3}, 3).to_dict() == r.to_dict()


def test_zero_coordinate_variant():
    ds = product_set(SimplicialComplex.simplex(0b11, 3), SimplicialComplex.simplex(0b110, 3))
    pred = with_zero_coordinate(product_punctured(0b11, 0b110, 3))
    assert pred.matches(weight_distribution_bruteforce(ds))
    assert pred.n == len(puncture_zero(ds)) + 1


def test_prediction_json_roundtrip():
    pred = shared_complement({1, 2, 3}, {3, 4}, 4)
    data = pred.to_dict()
    assert data["theorem_id"] == "shared-complement"
    assert data["n"] == 156 and data["d"] == 108
    assert TheoremPrediction.from_dict(data) == pred


def test_family_selection():
    assert family_for(False, "product", False).name == "product-punctured"
    assert family_for(True, "complement", True).name == "binary-shared-complement"

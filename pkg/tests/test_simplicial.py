from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import complexes
from quatcodes.simplicial import (
    SimplicialComplex,
    UClass,
    chi_complex,
    complex_size,
    count_u_classes,
    enumerate_faces,
    format_complex,
    format_monomials,
    generating_function,
    indices_of,
    mask_of,
    normalize,
    parse_complex,
    psi,
    u_class,
    u_class_cardinalities,
)


def test_mask_helpers():
    assert mask_of([1, 3]) == 0b101
    assert indices_of(0b101) == [1, 3]
    with pytest.raises(ValueError):
        mask_of([0])


def test_three_path_complex():
    cx = parse_complex("1,2;2,3;3,4", 4)
    assert len(cx) == 8
    assert format_monomials(generating_function(cx)) == "1+x1+x2+x3+x4+x1x2+x2x3+x3x4"


@given(st.data())
def test_size_by_inclusion_exclusion_matches_enumeration(data):
    m = data.draw(st.integers(1, 6))
    cx = data.draw(complexes(m, max_faces=4))
    faces = enumerate_faces(cx)
    assert complex_size(cx) == len(faces)
    assert all((f in cx) for f in faces)
    assert sum(1 for u in range(1 << m) if u in cx) == len(faces)


@given(st.data())
def test_generating_function_is_face_indicator(data):
    m = data.draw(st.integers(1, 6))
    cx = data.draw(complexes(m, max_faces=4))
    assert generating_function(cx) == {f: 1 for f in enumerate_faces(cx)}


@given(st.data())
def test_character_sum_matches_direct_sum(data):
    m = data.draw(st.integers(1, 6))
    cx = data.draw(complexes(m, max_faces=4))
    u = data.draw(st.integers(0, (1 << m) - 1))
    direct = sum((-1) ** (u & x).bit_count() for x in enumerate_faces(cx))
    assert chi_complex(u, cx) == direct


@given(st.data())
def test_two_face_character_values(data):
    m = data.draw(st.integers(2, 6))
    a = data.draw(st.integers(1, (1 << m) - 1))
    b = data.draw(st.integers(1, (1 << m) - 1))
    if a & b in (a, b):
        return
    cx = normalize([a, b], m)
    A2, B2, C2 = 2 ** a.bit_count(), 2 ** b.bit_count(), 2 ** (a & b).bit_count()
    expected = {UClass.U1: A2 + B2 - C2, UClass.U2: A2 - C2, UClass.U3: B2 - C2, UClass.U4: -C2, UClass.U5: 0}
    for u in range(1 << m):
        assert chi_complex(u, cx) == expected[u_class(u, a, b)]
        assert chi_complex(u, cx) == A2 * psi(u, a) + B2 * psi(u, b) - C2 * psi(u, a & b)


@given(st.data())
def test_u_class_sizes(data):
    m = data.draw(st.integers(1, 7))
    a = data.draw(st.integers(0, (1 << m) - 1))
    b = data.draw(st.integers(0, (1 << m) - 1))
    counted = count_u_classes(a, b, m)
    assert sum(counted) == 2**m
    assert u_class_cardinalities(a, b, m) == counted
    lit = u_class_cardinalities(a, b, m, literal=True)
    a_only, b_only = (a & ~b).bit_count(), (b & ~a).bit_count()
    if a_only != b_only and a_only > 0:
        assert lit != counted
    else:
        assert lit == counted


def test_normalize_keeps_maximal_faces():
    cx = normalize([0b1, 0b11, 0b110, 0b10], 3)
    assert cx.maximal_faces == (0b11, 0b110)
    assert normalize([], 3).maximal_faces == (0,)


@pytest.mark.parametrize(
    "faces",
    [(), (0b11, 0b1), (0b1000,)],
)
def test_invalid_complexes(faces):
    with pytest.raises(ValueError):
        SimplicialComplex(3, faces)


def test_parse_and_format_roundtrip():
    cx = parse_complex("1,2,3; 3,4", 4)
    assert format_complex(cx) == "1,2,3;3,4"
    assert parse_complex(format_complex(cx), 4) == cx
    assert format_complex(parse_complex("-", 2)) == "-"
    with pytest.raises(ValueError):
        parse_complex("1,5", 4)
    with pytest.raises(ValueError):
        parse_complex("1,x", 4)


def test_simplex_and_full():
    assert len(SimplicialComplex.full(4)) == 16
    assert len(SimplicialComplex.simplex(0b101, 3)) == 4
    assert str(SimplicialComplex.simplex(0, 3)) == "-"

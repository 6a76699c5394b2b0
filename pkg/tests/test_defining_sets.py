from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import face_pairs
from quatcodes.defining_sets import (
    DefiningSet,
    binary_vector,
    complement,
    format_f4_vector,
    generator_matrix,
    parse_binary_vectors,
    product_set,
    puncture_zero,
    subfield_defining_set,
    subfield_generator_matrix,
    subfield_image,
)
from quatcodes.gf4 import F4Vector
from quatcodes.simplicial import SimplicialComplex


def small_example():
    # columns (w, 1+w), (0, 1+w), (1+w, w), (1, w)
    return product_set(parse_binary_vectors("01,10"), parse_binary_vectors("11,01"), m=2)


def test_small_example_generator_matrix():
    g = generator_matrix(small_example())
    assert [[str(e) for e in r] for r in g.to_rows()] == [["w", "0", "1+w", "1"], ["1+w", "1+w", "w", "w"]]


def test_small_example_subfield_matrix_and_set():
    ds = small_example()
    assert subfield_generator_matrix(generator_matrix(ds)) == (
        (1, 0, 1, 0),
        (1, 1, 1, 1),
        (1, 0, 0, 1),
        (0, 0, 1, 1),
    )
    d2 = subfield_defining_set(ds)
    assert [binary_vector(v, 4) for v in d2.elements] == [(1, 1, 1, 0), (0, 1, 0, 0), (1, 1, 0, 1), (0, 1, 1, 1)]


@given(st.data())
def test_subfield_matrix_columns_are_subfield_images(data):
    m = data.draw(st.integers(1, 4))
    elems = data.draw(st.lists(st.tuples(st.integers(0, 2**m - 1), st.integers(0, 2**m - 1)), min_size=1, max_size=8, unique=True))
    ds = DefiningSet("F4", m, tuple(F4Vector(m, a, b) for a, b in elems))
    stacked = subfield_generator_matrix(generator_matrix(ds))
    assert stacked == generator_matrix(subfield_defining_set(ds))


@given(face_pairs(max_m=4))
def test_product_and_variants_sizes(pair):
    A, B, m = pair
    ds = product_set(SimplicialComplex.simplex(A, m), SimplicialComplex.simplex(B, m))
    size = 2 ** (A.bit_count() + B.bit_count())
    assert len(ds) == size
    assert len(puncture_zero(ds)) == size - 1
    comp = complement(ds)
    assert len(comp) == 4**m - size
    assert not set(comp.elements) & set(ds.elements)
    assert all(not e.is_zero() for e in comp.elements)
    assert [e.encode() for e in comp.elements] == sorted(e.encode() for e in comp.elements)


def test_product_order_is_first_factor_outer():
    ds = product_set([1, 2], [3, 0], m=2)
    assert [(e.alpha, e.beta) for e in ds.elements] == [(1, 3), (1, 0), (2, 3), (2, 0)]


def test_subfield_image_formula():
    v = F4Vector(3, 0b011, 0b110)
    assert subfield_image(v) == 0b110 | ((0b011 ^ 0b110) << 3)


def test_json_roundtrip():
    ds = small_example()
    assert DefiningSet.from_json(ds.to_json()) == ds
    b = subfield_defining_set(ds)
    assert DefiningSet.from_json(b.to_json()) == b


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(field="F8", m=2, elements=()),
        dict(field="F4", m=2, elements=(F4Vector(2, 1, 0), F4Vector(2, 1, 0))),
        dict(field="F4", m=2, elements=(F4Vector(3, 1, 0),)),
        dict(field="F2", m=2, elements=(4,)),
        dict(field="F2", m=2, elements=(), provenance="other"),
    ],
)
def test_invalid_sets(kwargs):
    with pytest.raises(ValueError):
        DefiningSet(**kwargs)


def test_parse_binary_vectors():
    assert parse_binary_vectors("01, 10") == [2, 1]
    for bad in ("", "012", "01,,10"):
        with pytest.raises(ValueError):
            parse_binary_vectors(bad)


def test_format_f4_vector():
    assert format_f4_vector(F4Vector(2, 0b01, 0b11)) == "(1+w,w)"


def test_complement_requires_f4():
    with pytest.raises(ValueError):
        complement(DefiningSet("F2", 2, (1,)))

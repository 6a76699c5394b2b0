"""Ordered defining sets D = D1 + w D2 and their derived sets.

F4 sets hold :class:`F4Vector` elements. F2 sets hold int masks; the binary
image of d1 + w d2 is the length-2m vector (d2 | d1 + d2), stored with d2 in
the low m bits and d1 ^ d2 in the high m bits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Union

from .gf4 import F4, F4Matrix, F4Vector, f4_vector
from .simplicial import SimplicialComplex, enumerate_faces

F4_FIELD = "F4"
F2_FIELD = "F2"
PROVENANCES = ("product", "punctured", "complement", "subfield-image", "explicit")

Element = Union[F4Vector, int]


@dataclass(frozen=True)
class DefiningSet:
    field: str
    m: int  # ambient dimension; 2m for binary images
    elements: tuple
    provenance: str = "explicit"

    def __post_init__(self) -> None:
        if self.field not in (F4_FIELD, F2_FIELD):
            raise ValueError(f"unknown field {self.field!r}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("defining-set elements must be pairwise distinct")
        if self.field == F4_FIELD:
            for e in self.elements:
                if not isinstance(e, F4Vector) or e.m != self.m:
                    raise ValueError(f"element {e!r} is not a vector of F4^{self.m}")
                f4_vector(e.m, e.alpha, e.beta)
        else:
            for e in self.elements:
                if e < 0 or e >> self.m:
                    raise ValueError(f"element {e} is not a vector of F2^{self.m}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def q(self) -> int:
        return 4 if self.field == F4_FIELD else 2

    def message_bits(self) -> int:
        """Bit length of a message: 2m for F4 (alpha|beta), m for F2."""
        return 2 * self.m if self.field == F4_FIELD else self.m

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        if self.field == F4_FIELD:
            elems = [[e.alpha, e.beta] for e in self.elements]
        else:
            elems = list(self.elements)
        return {"field": self.field, "m": self.m, "elements": elems, "provenance": self.provenance}

    @classmethod
    def from_dict(cls, data: dict) -> "DefiningSet":
        field, m = data["field"], int(data["m"])
        if field == F4_FIELD:
            elems = tuple(F4Vector(m, int(a), int(b)) for a, b in data["elements"])
        else:
            elems = tuple(int(e) for e in data["elements"])
        return cls(field, m, elems, data.get("provenance", "explicit"))

    @classmethod
    def from_json(cls, text: str) -> "DefiningSet":
        return cls.from_dict(json.loads(text))


def _members(part: SimplicialComplex | Sequence[int], m: int | None) -> tuple[list[int], int]:
    if isinstance(part, SimplicialComplex):
        if m is not None and m != part.m:
            raise ValueError("dimension mismatch")
        return enumerate_faces(part), part.m
    if m is None:
        raise ValueError("m is required for explicit sets")
    return list(part), m


def product_set(
    first: SimplicialComplex | Sequence[int],
    second: SimplicialComplex | Sequence[int],
    m: int | None = None,
) -> DefiningSet:
    """D = D1 + w D2 ordered with d1 as the outer loop.

    Complexes contribute their faces in ascending mask order; explicit mask
    sequences keep the order given.
    """
    d1s, m1 = _members(first, m)
    d2s, m2 = _members(second, m)
    if m1 != m2:
        raise ValueError(f"dimension mismatch: {m1} != {m2}")
    elems = tuple(F4Vector(m1, d1, d2) for d1 in d1s for d2 in d2s)
    return DefiningSet(F4_FIELD, m1, elems, "product")


def puncture_zero(ds: DefiningSet) -> DefiningSet:
    if ds.field == F4_FIELD:
        elems = tuple(e for e in ds.elements if not e.is_zero())
    else:
        elems = tuple(e for e in ds.elements if e)
    return DefiningSet(ds.field, ds.m, elems, "punctured")


def complement(ds: DefiningSet) -> DefiningSet:
    """Nonzero vectors of F4^m outside D, by ascending ``beta * 2^m + alpha``."""
    if ds.field != F4_FIELD:
        raise ValueError("complement is defined for F4 defining sets")
    taken = {e.encode() for e in ds.elements}
    taken.add(0)
    m = ds.m
    elems = tuple(F4Vector(m, c & ((1 << m) - 1), c >> m) for c in range(1, 1 << (2 * m)) if c not in taken)
    return DefiningSet(F4_FIELD, m, elems, "complement")


def subfield_image(v: F4Vector) -> int:
    return v.beta | ((v.alpha ^ v.beta) << v.m)


def subfield_defining_set(ds: DefiningSet) -> DefiningSet:
    """Binary defining set {(d2, d1 + d2)} of the subfield code, same order as D."""
    if ds.field != F4_FIELD:
        raise ValueError("subfield image requires an F4 defining set")
    return DefiningSet(F2_FIELD, 2 * ds.m, tuple(subfield_image(e) for e in ds.elements), "subfield-image")


def generator_matrix(ds: DefiningSet) -> F4Matrix | tuple[tuple[int, ...], ...]:
    """Matrix whose columns are the elements of D (m x n over the set's field)."""
    if ds.field == F4_FIELD:
        rows = [[e.coordinate(i) for e in ds.elements] for i in range(ds.m)]
        return F4Matrix(ds.m, len(ds), tuple(x for r in rows for x in r)) if ds.elements else F4Matrix(ds.m, 0, ())
    return tuple(tuple((e >> i) & 1 for e in ds.elements) for i in range(ds.m))


def subfield_generator_matrix(g: F4Matrix) -> tuple[tuple[int, ...], ...]:
    """Stack G2 over G1 + G2 for G = G1 + w G2."""
    g1, g2 = g.split()
    top = g2
    bottom = tuple(tuple(x ^ y for x, y in zip(r1, r2)) for r1, r2 in zip(g1, g2))
    return top + bottom


def binary_vector(mask: int, length: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(length))


def parse_binary_vectors(text: str) -> list[int]:
    """``"01,10"`` -> masks; each word lists coordinates 1..m left to right."""
    out = []
    for word in text.split(","):
        word = word.strip()
        if not word or set(word) - {"0", "1"}:
            raise ValueError(f"bad binary vector {word!r}")
        out.append(sum(1 << i for i, ch in enumerate(word) if ch == "1"))
    return out


def format_f4_vector(v: F4Vector) -> str:
    return "(" + ",".join(str(F4(c)) for c in v.coordinates()) + ")"

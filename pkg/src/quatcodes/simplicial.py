"""Simplicial complexes on [m] given by their maximal faces.

Subsets of [m] are int masks, bit i-1 standing for element i. A complex is
downward closed, so it is determined by the antichain of its maximal faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations
from typing import Iterable, Sequence

MAX_FACES = 8


def mask_of(indices: Iterable[int]) -> int:
    """1-based indices -> mask."""
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"indices are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


def indices_of(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def _check_bits(mask: int, m: int) -> None:
    if mask < 0 or mask >> m:
        raise ValueError(f"subset {indices_of(mask)} is not contained in [{m}]")


@dataclass(frozen=True)
class SimplicialComplex:
    m: int
    maximal_faces: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.maximal_faces:
            raise ValueError("a complex always contains the empty face; use maximal_faces=(0,)")
        if len(self.maximal_faces) > MAX_FACES:
            raise ValueError(f"at most {MAX_FACES} maximal faces are supported")
        for f in self.maximal_faces:
            _check_bits(f, self.m)
        for f, g in combinations(self.maximal_faces, 2):
            if f & g in (f, g):
                raise ValueError("maximal faces must form an antichain")

    @classmethod
    def simplex(cls, face: int, m: int) -> "SimplicialComplex":
        """Delta_F: all subsets of one face."""
        _check_bits(face, m)
        return cls(m, (face,))

    @classmethod
    def full(cls, m: int) -> "SimplicialComplex":
        """The whole cube F2^m."""
        return cls(m, ((1 << m) - 1,))

    def __len__(self) -> int:
        return complex_size(self)

    def __contains__(self, u: int) -> bool:
        return any(u & f == u for f in self.maximal_faces)

    def __str__(self) -> str:
        return format_complex(self)


def normalize(faces: Sequence[int], m: int) -> SimplicialComplex:
    """Reduce a list of faces to its sorted antichain of maximal elements."""
    for f in faces:
        _check_bits(f, m)
    uniq = sorted(set(faces))
    maximal = [f for f in uniq if not any(f != g and f & g == f for g in uniq)]
    return SimplicialComplex(m, tuple(maximal) if maximal else (0,))


def enumerate_faces(cx: SimplicialComplex) -> list[int]:
    seen: set[int] = set()
    for face in cx.maximal_faces:
        sub = face
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & face
    return sorted(seen)


def _intersections(cx: SimplicialComplex):
    """Yield (|S|, intersection of S) over nonempty subfamilies S of maximal faces."""
    faces = cx.maximal_faces
    full = (1 << cx.m) - 1
    for r in range(1, len(faces) + 1):
        for sub in combinations(faces, r):
            inter = full
            for f in sub:
                inter &= f
            yield r, inter


def complex_size(cx: SimplicialComplex) -> int:
    """Inclusion-exclusion over the maximal faces."""
    return sum((-1) ** (r + 1) * (1 << inter.bit_count()) for r, inter in _intersections(cx))


def generating_function(cx: SimplicialComplex) -> dict[int, int]:
    """Monomial coefficients of sum_{v in cx} x^v, expanded by inclusion-exclusion.

    Keys are exponent masks; each product prod_{i in S}(1 + x_i) contributes
    every submask of S.
    """
    coeffs: dict[int, int] = {}
    for r, inter in _intersections(cx):
        sign = (-1) ** (r + 1)
        sub = inter
        while True:
            coeffs[sub] = coeffs.get(sub, 0) + sign
            if sub == 0:
                break
            sub = (sub - 1) & inter
    return {mono: c for mono, c in coeffs.items() if c}


def format_monomials(monomials: Iterable[int]) -> str:
    """``1+x1+x2+x1x2`` ordered by degree, then by index list."""
    ordered = sorted(monomials, key=lambda v: (v.bit_count(), indices_of(v)))
    return "+".join("".join(f"x{i}" for i in indices_of(v)) or "1" for v in ordered)


def psi(u: int, x: int) -> int:
    """1 iff u and X are disjoint."""
    return int(u & x == 0)


def chi_complex(u: int, cx: SimplicialComplex) -> int:
    """Character sum of u over the complex, sum_{x in cx} (-1)^{u.x}."""
    _check_bits(u, cx.m)
    return sum(
        (-1) ** (r + 1) * (1 << inter.bit_count()) * psi(u, inter)
        for r, inter in _intersections(cx)
    )


class UClass(IntEnum):
    U1 = 1  # misses A u B
    U2 = 2  # misses A, meets B \ A
    U3 = 3  # misses B, meets A \ B
    U4 = 4  # meets A \ B and B \ A, misses A n B
    U5 = 5  # meets A n B


def u_class(u: int, a: int, b: int) -> UClass:
    if u & a & b:
        return UClass.U5
    if u & (a | b) == 0:
        return UClass.U1
    if u & a == 0:
        return UClass.U2
    if u & b == 0:
        return UClass.U3
    return UClass.U4


def u_class_cardinalities(a: int, b: int, m: int, literal: bool = False) -> tuple[int, int, int, int, int]:
    """Sizes of U1..U5 from their closed forms.

    ``literal=True`` evaluates the uncorrected |U4| that repeats the (2^|A\\B| - 1)
    factor; the default uses (2^|A\\B| - 1)(2^|B\\A| - 1).
    """
    _check_bits(a, m)
    _check_bits(b, m)
    union = (a | b).bit_count()
    inter = (a & b).bit_count()
    a_only = (a & ~b).bit_count()
    b_only = (b & ~a).bit_count()
    base = 1 << (m - union)
    u1 = base
    u2 = base * ((1 << b_only) - 1)
    u3 = base * ((1 << a_only) - 1)
    u4 = base * ((1 << a_only) - 1) * ((1 << (a_only if literal else b_only)) - 1)
    u5 = (1 << (m - inter)) * ((1 << inter) - 1)
    return u1, u2, u3, u4, u5


def count_u_classes(a: int, b: int, m: int) -> tuple[int, int, int, int, int]:
    """Sizes of U1..U5 by enumerating F2^m."""
    counts = [0] * 5
    for u in range(1 << m):
        counts[u_class(u, a, b) - 1] += 1
    return tuple(counts)  # type: ignore[return-value]


def parse_complex(text: str, m: int) -> SimplicialComplex:
    """Parse ``"1,2,3;3,4"`` (faces split by ';', '-' for the empty face)."""
    faces = []
    for part in text.split(";"):
        part = part.strip()
        if part in ("-", ""):
            faces.append(0)
            continue
        try:
            idx = [int(tok) for tok in part.split(",") if tok.strip()]
        except ValueError as exc:
            raise ValueError(f"bad face {part!r}") from exc
        if any(i > m for i in idx):
            raise ValueError(f"face {part!r} is not contained in [{m}]")
        faces.append(mask_of(idx))
    return normalize(faces, m)


def format_complex(cx: SimplicialComplex) -> str:
    return ";".join(",".join(map(str, indices_of(f))) if f else "-" for f in cx.maximal_faces)

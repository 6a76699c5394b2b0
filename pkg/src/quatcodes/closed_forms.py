"""Closed-form weight distributions for the simplicial-complex code families.

Every predictor takes faces ``A`` and ``B`` (iterables of 1-based indices, or
int masks) plus the ambient dimension ``m`` and returns a
:class:`TheoremPrediction`. Rows are evaluated with exact rationals, rows with
count 0 are dropped and rows of equal weight are merged.

``literal=True`` evaluates the uncorrected reference expressions, including the
entries known to be wrong; the default evaluates the corrected expressions,
which agree with brute force.

Notation: a = |A|, b = |B|, c = |A n B|, a' = |A \\ B|, b' = |B \\ A|,
u = |A u B| and N = 2^a + 2^b - 2^c (the size of the two-face complex).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Union

from .bounds import griesmer_min_length
from .defining_sets import (
    DefiningSet,
    complement,
    product_set,
    puncture_zero,
    subfield_defining_set,
)
from .engine import WeightDistribution, code_dimension, dual_min_distance_leq
from .simplicial import SimplicialComplex, mask_of, normalize

Face = Union[int, Iterable[int]]
Rows = list[tuple[Fraction, Fraction]]


class AdmissibilityError(ValueError):
    """The faces are outside the domain where a closed form applies."""


def _p2(e: int) -> Fraction:
    return Fraction(2) ** e


def as_mask(face: Face) -> int:
    if isinstance(face, int):
        if face < 0:
            raise ValueError("a face mask must be non-negative")
        return face
    return mask_of(face)


@dataclass(frozen=True)
class Shape:
    """The cardinalities every closed form depends on."""

    m: int
    a: int
    b: int
    c: int
    a_only: int
    b_only: int
    union: int

    @classmethod
    def of(cls, A: Face, B: Face, m: int) -> "Shape":
        am, bm = as_mask(A), as_mask(B)
        if m < 1:
            raise ValueError("m must be positive")
        if (am | bm) >> m:
            raise ValueError(f"faces must lie in [{m}]")
        return cls(
            m=m,
            a=am.bit_count(),
            b=bm.bit_count(),
            c=(am & bm).bit_count(),
            a_only=(am & ~bm).bit_count(),
            b_only=(bm & ~am).bit_count(),
            union=(am | bm).bit_count(),
        )

    @property
    def size(self) -> int:
        """N = 2^a + 2^b - 2^c."""
        return 2**self.a + 2**self.b - 2**self.c


@dataclass(frozen=True)
class TheoremPrediction:
    theorem_id: str
    n: int
    k: int
    q: int
    distribution: dict[int, int]
    flags: dict = field(default_factory=dict)

    @property
    def d(self) -> int | None:
        nz = [w for w, c in self.distribution.items() if w > 0 and c]
        return min(nz) if nz else None

    @property
    def params(self) -> tuple[int, int, int | None]:
        return self.n, self.k, self.d

    def to_weight_distribution(self) -> WeightDistribution:
        return WeightDistribution(dict(self.distribution), self.n, self.k, self.q)

    def to_dict(self) -> dict:
        out = self.to_weight_distribution().to_dict()
        out["theorem_id"] = self.theorem_id
        out["flags"] = dict(self.flags)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "TheoremPrediction":
        wd = WeightDistribution.from_dict(data)
        return cls(data["theorem_id"], wd.n, wd.k, wd.q, wd.counts, dict(data.get("flags", {})))

    def matches(self, wd: WeightDistribution) -> bool:
        return not diff_distributions(self.to_weight_distribution(), wd)


def diff_distributions(expected: WeightDistribution, observed: WeightDistribution) -> list[str]:
    """Human-readable differences; empty when parameters and counts agree."""
    out = []
    for name in ("n", "k", "q"):
        if getattr(expected, name) != getattr(observed, name):
            out.append(f"{name}: expected {getattr(expected, name)}, observed {getattr(observed, name)}")
    for w in sorted(set(expected.counts) | set(observed.counts)):
        e, o = expected.counts.get(w, 0), observed.counts.get(w, 0)
        if e != o:
            out.append(f"weight {w}: expected {e}, observed {o}")
    return out


def _finish(theorem_id: str, n: int, k: int, q: int, rows: Rows, literal: bool) -> TheoremPrediction:
    dist: dict[int, int] = {0: 1}
    for w, c in rows:
        if c == 0:
            continue
        if w.denominator != 1 or c.denominator != 1:
            raise ArithmeticError(f"{theorem_id}: non-integral row ({w}, {c})")
        if not literal and (c < 0 or w <= 0):
            raise ArithmeticError(f"{theorem_id}: invalid row weight {w} count {c}")
        dist[int(w)] = dist.get(int(w), 0) + int(c)
    dist = {w: c for w, c in dist.items() if c}
    total = sum(dist.values())
    if not literal and total != q**k:
        raise ArithmeticError(f"{theorem_id}: counts sum to {total}, expected {q**k}")
    nonzero = sorted(w for w in dist if w > 0)
    d = nonzero[0] if nonzero else None
    flags = {
        "weights": len(nonzero),
        "griesmer_code": d is not None and d > 0 and griesmer_min_length(k, d, q) == n,
        "literal": literal,
        "total_ok": total == q**k,
    }
    return TheoremPrediction(theorem_id, n, k, q, dist, flags)


def _complement_rows(rows: Rows, top: Fraction, scale: Fraction) -> Rows:
    """Weights w -> top - w with counts scaled, plus the row (top, scale - 1)."""
    return [(top - w, c * scale) for w, c in rows] + [(top, scale - 1)]


def _require_incomparable(A: Face, B: Face) -> None:
    am, bm = as_mask(A), as_mask(B)
    if am & bm in (am, bm):
        raise AdmissibilityError("the two maximal faces must be incomparable")


def _require_not_full(sh: Shape) -> None:
    if sh.a == sh.b == sh.m:
        raise AdmissibilityError("A = B = [m] leaves an empty complement")


# ---------------------------------------------------------------------------
# single-simplex product D = Delta_A + w Delta_B


def product_punctured(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    """Quaternary code of (Delta_A + w Delta_B) minus zero."""
    sh = Shape.of(A, B, m)
    if sh.a == sh.b == 0:
        raise AdmissibilityError("A = B = {} gives an empty punctured set")
    half = 3 * (_p2(sh.a_only + sh.b_only) - 1)
    rows = [
        (_p2(sh.a + sh.b - 1), half),
        (3 * _p2(sh.a + sh.b - 2), _p2(2 * sh.union) - 1 - half),
    ]
    return _finish("product-punctured", 2 ** (sh.a + sh.b) - 1, sh.union, 4, rows, literal)


def cube_product_punctured(A: Face, m: int, full_first: bool = True, literal: bool = False) -> TheoremPrediction:
    """Quaternary code of (F2^m + w Delta_A) or (Delta_A + w F2^m), minus zero."""
    sh = Shape.of(A, 0, m)
    half = 3 * (_p2(m - sh.a) - 1)
    rows = [
        (_p2(m + sh.a - 1), half),
        (3 * _p2(m + sh.a - 2), _p2(2 * m) - 1 - half),
    ]
    return _finish("cube-product-punctured", 2 ** (m + sh.a) - 1, m, 4, rows, literal)


def product_complement(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    """Quaternary code of the complement of Delta_A + w Delta_B in F4^m minus zero."""
    sh = Shape.of(A, B, m)
    _require_not_full(sh)
    f = _p2(2 * (m - sh.union))
    top = 3 * _p2(2 * m - 2)
    half = 3 * (_p2(sh.a_only + sh.b_only) - 1)
    rows = [
        (top - 3 * _p2(sh.a + sh.b - 2), f * (_p2(2 * sh.union) - 1 - half)),
        (top - _p2(sh.a + sh.b - 1), f * half),
        (top, f - 1),
    ]
    return _finish("product-complement", 4**m - 2 ** (sh.a + sh.b), m, 4, rows, literal)


# ---------------------------------------------------------------------------
# two-face complex, D = Delta + w Delta


def _two_face_rows(sh: Shape) -> Rows:
    """Per-codeword rows of the punctured quaternary code (no ambient scaling)."""
    A2, B2, C2 = _p2(sh.a), _p2(sh.b), _p2(sh.c)
    N = A2 + B2 - C2
    s, t = _p2(sh.a_only) - 1, _p2(sh.b_only) - 1
    q34 = Fraction(3, 4)
    return [
        (A2 * (3 * _p2(sh.a - 2) + B2 - C2), 3 * s),
        (B2 * (A2 + 3 * _p2(sh.b - 2) - C2), 3 * t),
        ((A2 + B2) * (3 * _p2(sh.a - 2) + 3 * _p2(sh.b - 2) - C2), 3 * s * t),
        (q34 * A2 * (A2 + 2 * B2 - 2 * C2), s * (s - 1)),
        (q34 * B2 * (2 * A2 + B2 - 2 * C2), t * (t - 1)),
        (q34 * N**2 - (A2 - C2) * (B2 - C2) / 4 + C2 * (A2 + B2 - 2 * C2) / 4, 6 * s * t),
        (q34 * N**2 + C2 * (2 * A2 - 3 * C2) / 4, 3 * s * t * (t - 1)),
        (q34 * N**2 + C2 * (2 * B2 - 3 * C2) / 4, 3 * s * t * (s - 1)),
        (q34 * (A2 + B2) * (A2 + B2 - 2 * C2), s * t * (s - 1) * (t - 1)),
        (q34 * N**2, _p2(2 * sh.union) - _p2(2 * (sh.a_only + sh.b_only))),
    ]


def shared_punctured(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    """Quaternary code of (Delta + w Delta) minus zero, Delta with maximal faces A, B."""
    _require_incomparable(A, B)
    sh = Shape.of(A, B, m)
    return _finish("shared-punctured", sh.size**2 - 1, sh.union, 4, _two_face_rows(sh), literal)


def shared_complement(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    """Quaternary code of the complement of Delta + w Delta."""
    _require_incomparable(A, B)
    sh = Shape.of(A, B, m)
    rows = _complement_rows(_two_face_rows(sh), 3 * _p2(2 * m - 2), _p2(2 * (m - sh.union)))
    return _finish("shared-complement", 4**m - sh.size**2, m, 4, rows, literal)


def special_case(A: Face, B: Face, m: int) -> str:
    """Which of the three few-weight shapes (A, B) has: "i", "ii" or "iii"."""
    _require_incomparable(A, B)
    sh = Shape.of(A, B, m)
    if sh.c == 0 and sh.a == sh.b == 1:
        return "i"
    if sh.c == 0 and sh.a == sh.b > 1:
        return "ii"
    if sh.c > 0 and sh.a_only == sh.b_only == 1:
        return "iii"
    raise AdmissibilityError("needs disjoint faces of equal size, or faces differing in one element each")


def _special_punctured_rows(case: str, sh: Shape, literal: bool) -> Rows:
    if case == "i":
        return [(Fraction(5), Fraction(6)), (Fraction(7), Fraction(6)), (Fraction(8), Fraction(3))]
    if case == "ii":
        X = _p2(sh.a)
        return [
            (X * (3 * X / 4 + X - 1), 6 * (X - 1)),
            (2 * X * (3 * X / 2 - 1), 3 * (X - 1) ** 2),
            (3 * X / 2 * (3 * X / 2 - 1), (3 if literal else 2) * (X - 1) * (X - 2)),
            (11 * X**2 / 4 - 2 * X, 6 * (X - 1) ** 2),
            (3 * X**2 - 3 * X + X / 2, 6 * (X - 1) ** 2 * (X - 2)),
            (3 * X * (X - 1), (X - 1) ** 2 * (X - 2) ** 2),
        ]
    Y = _p2(2 * sh.a)
    return [
        (Y / 4 + Y, Fraction(6)),
        (2 * Y, Fraction(3)),
        ((26 if literal else 28) * Y / 16, Fraction(6)),
        (27 * Y / 16, _p2(2 * sh.a + 2) - 16),
    ]


def shared_punctured_special(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    """Few-weight specializations of :func:`shared_punctured`."""
    case = special_case(A, B, m)
    sh = Shape.of(A, B, m)
    n = sh.size**2 - 1
    k = {"i": 2, "ii": 2 * sh.a, "iii": sh.a + 1}[case]
    pred = _finish(f"shared-punctured-{case}", n, k, 4, _special_punctured_rows(case, sh, literal), literal)
    pred.flags["case"] = case
    return pred


def shared_complement_special(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    """Few-weight specializations of :func:`shared_complement`."""
    case = special_case(A, B, m)
    sh = Shape.of(A, B, m)
    W = 3 * _p2(2 * m - 2)
    if case == "i":
        f = _p2(2 * m - 4)
        rows = [(W - 5, 6 * f), (W - 7, 6 * f), (W - 8, 3 * f), (W, f - 1)]
    elif case == "ii":
        X = _p2(sh.a)
        f = _p2(2 * m - 4 * sh.a)
        if literal:
            # uncorrected rows 4 and 5 carry sign slips relative to the punctured rows
            row4 = W - 11 * X**2 / 4 - 2 * X
            row5 = W - 3 * X**2 - 3 * X + X / 2
        else:
            row4 = W - 11 * X**2 / 4 + 2 * X
            row5 = W - 3 * X**2 + 3 * X - X / 2
        rows = [
            (W - X * (3 * X / 4 + X - 1), 6 * (X - 1) * f),
            (W - 2 * X * (3 * X / 2 - 1), 3 * (X - 1) ** 2 * f),
            (W - 3 * X / 2 * (3 * X / 2 - 1), (3 if literal else 2) * (X - 1) * (X - 2) * f),
            (row4, 6 * (X - 1) ** 2 * f),
            (row5, 6 * (X - 1) ** 2 * (X - 2) * f),
            (W - 3 * X * (X - 1), (X - 1) ** 2 * (X - 2) ** 2 * f),
            (W, f - 1),
        ]
    else:
        Y = _p2(2 * sh.a)
        f = _p2(2 * (m - sh.a - 1))
        rows = [
            (W - Y / 4 + Y if literal else W - Y / 4 - Y, 6 * f),
            (W - 2 * Y, 3 * f),
            (W - (26 if literal else 28) * Y / 16, 6 * f),
            (W - 27 * Y / 16, (_p2(2 * sh.a + 2) - 16) * f),
            (W, f - 1),
        ]
    pred = _finish(f"shared-complement-{case}", 4**m - sh.size**2, m, 4, rows, literal)
    pred.flags["case"] = case
    return pred


# ---------------------------------------------------------------------------
# binary subfield codes


def binary_product_punctured(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    sh = Shape.of(A, B, m)
    if sh.a == sh.b == 0:
        raise AdmissibilityError("A = B = {} gives an empty punctured set")
    k = sh.a + sh.b
    rows = [(_p2(k - 1), _p2(k) - 1)]
    return _finish("binary-product-punctured", 2**k - 1, k, 2, rows, literal)


def binary_product_complement(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    sh = Shape.of(A, B, m)
    _require_not_full(sh)
    e = 2 * m - sh.a - sh.b
    rows = [
        (_p2(2 * m - 1) - _p2(sh.a + sh.b - 1), _p2(2 * m) - _p2(e)),
        (_p2(2 * m - 1), _p2(e) - 1),
    ]
    return _finish("binary-product-complement", 4**m - 2 ** (sh.a + sh.b), 2 * m, 2, rows, literal)


def _binary_two_face_rows(sh: Shape, literal: bool) -> Rows:
    A2, B2, C2 = _p2(sh.a), _p2(sh.b), _p2(sh.c)
    N = A2 + B2 - C2
    s, t = _p2(sh.a_only) - 1, _p2(sh.b_only) - 1
    half = Fraction(1, 2)
    return [
        (A2 / 2 * N, 2 * s),
        (B2 / 2 * N, 2 * t),
        ((A2 + B2) / 2 * N, 2 * s * t),
        (B2 / 2 * (2 * A2 + B2 - 2 * C2), t**2),
        (A2 / 2 * (A2 + 2 * B2 - 2 * C2), s**2),
        ((A2 + B2) / 2 * (A2 + B2 - 2 * C2), t**4 if literal else s**2 * t**2),
        (half * N**2 - half * (A2 - C2) * (B2 - C2), 2 * s * t),
        (half * N**2 + half * (A2 - C2) * C2, 2 * s * t**2),
        (half * N**2 + half * (B2 - C2) * C2, 2 * s**2 * t),
        (half * N**2, _p2(2 * sh.union) - _p2(2 * (sh.a_only + sh.b_only))),
    ]


def binary_shared_punctured(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    _require_incomparable(A, B)
    sh = Shape.of(A, B, m)
    rows = _binary_two_face_rows(sh, literal)
    return _finish("binary-shared-punctured", sh.size**2 - 1, 2 * sh.union, 2, rows, literal)


def binary_shared_complement(A: Face, B: Face, m: int, literal: bool = False) -> TheoremPrediction:
    _require_incomparable(A, B)
    sh = Shape.of(A, B, m)
    rows = _complement_rows(_binary_two_face_rows(sh, literal), _p2(2 * m - 1), _p2(2 * (m - sh.union)))
    return _finish("binary-shared-complement", 4**m - sh.size**2, 2 * m, 2, rows, literal)


@dataclass(frozen=True)
class DualCheck:
    n: int
    k: int
    d: int | None
    sphere_lhs: int  # sum_{i<=2} C(n, i)
    sphere_rhs: int  # 2^(n - k)
    almost_optimal: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "sphere_lhs": self.sphere_lhs,
            "sphere_rhs": self.sphere_rhs,
            "almost_optimal": self.almost_optimal,
        }


def binary_shared_dual_check(A: Face, B: Face, m: int) -> DualCheck:
    """Dual of the punctured binary two-face code: distance and the radius-2 packing test.

    The packing test is sum_{i<=2} C(n, i) > 2^(n-k): no [n, k, 5] dual exists,
    so distance 3 is one short of what the bound allows.
    """
    _require_incomparable(A, B)
    ds = subfield_defining_set(oracle_set("shared-punctured", A, B, m))
    n = len(ds)
    k = n - code_dimension(ds)
    d = dual_min_distance_leq(ds, 4)
    lhs = sum(comb(n, i) for i in range(3))
    rhs = 2 ** (n - k)
    return DualCheck(n, k, d, lhs, rhs, lhs > rhs)


def with_zero_coordinate(pred: TheoremPrediction) -> TheoremPrediction:
    """The unpunctured set adds one always-zero coordinate: weights unchanged, n + 1."""
    return TheoremPrediction(pred.theorem_id + "+zero", pred.n + 1, pred.k, pred.q, dict(pred.distribution), dict(pred.flags))


# ---------------------------------------------------------------------------
# defining sets matching each family


def _simplex(face: Face, m: int) -> SimplicialComplex:
    return SimplicialComplex.simplex(as_mask(face), m)


def _two_face(A: Face, B: Face, m: int) -> SimplicialComplex:
    return normalize([as_mask(A), as_mask(B)], m)


def oracle_set(family: str, A: Face, B: Face, m: int) -> DefiningSet:
    """The defining set whose code the family's closed form describes."""
    binary = family.startswith("binary-")
    base = family.removeprefix("binary-").removesuffix("-special")
    if base.startswith("product-"):
        ds = product_set(_simplex(A, m), _simplex(B, m))
    elif base.startswith("shared-"):
        cx = _two_face(A, B, m)
        ds = product_set(cx, cx)
    elif base == "cube-product-punctured":
        ds = product_set(SimplicialComplex.full(m), _simplex(A, m))
    else:
        raise KeyError(f"unknown family {family!r}")
    ds = puncture_zero(ds) if base.endswith("punctured") else complement(ds)
    return subfield_defining_set(ds) if binary else ds


@dataclass(frozen=True)
class Family:
    name: str
    predict: Callable[..., TheoremPrediction]
    two_face: bool
    binary: bool
    variant: str  # "punctured" or "complement"


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in (
        Family("product-punctured", product_punctured, False, False, "punctured"),
        Family("product-complement", product_complement, False, False, "complement"),
        Family("shared-punctured", shared_punctured, True, False, "punctured"),
        Family("shared-complement", shared_complement, True, False, "complement"),
        Family("shared-punctured-special", shared_punctured_special, True, False, "punctured"),
        Family("shared-complement-special", shared_complement_special, True, False, "complement"),
        Family("binary-product-punctured", binary_product_punctured, False, True, "punctured"),
        Family("binary-product-complement", binary_product_complement, False, True, "complement"),
        Family("binary-shared-punctured", binary_shared_punctured, True, True, "punctured"),
        Family("binary-shared-complement", binary_shared_complement, True, True, "complement"),
    )
}


def family_for(shared: bool, variant: str, subfield: bool) -> Family:
    """Family for a CLI-style selection; the ``product`` variant maps to ``punctured``."""
    base = "punctured" if variant in ("product", "punctured") else variant
    name = ("binary-" if subfield else "") + ("shared-" if shared else "product-") + base
    return FAMILIES[name]


def admissible(family: Family, A: Face, B: Face, m: int) -> bool:
    try:
        family.predict(A, B, m)
    except AdmissibilityError:
        return False
    return True

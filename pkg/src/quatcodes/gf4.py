"""Arithmetic over F4 = F2(w), w^2 + w + 1 = 0.

A scalar a + w*b is stored as the integer ``a | (b << 1)``, so addition is XOR.
Vectors of F4^m are bit-sliced into two subset masks: ``alpha`` holds the
coefficients of 1 and ``beta`` the coefficients of w, one bit per coordinate
(bit i-1 <-> coordinate i).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, NamedTuple, Sequence

MAX_M = 16


class F4(IntEnum):
    ZERO = 0
    ONE = 1
    W = 2
    W2 = 3  # 1 + w

    @classmethod
    def from_parts(cls, a: int, b: int) -> "F4":
        return cls((a & 1) | ((b & 1) << 1))

    @property
    def a(self) -> int:
        return int(self) & 1

    @property
    def b(self) -> int:
        return (int(self) >> 1) & 1

    def __str__(self) -> str:
        return _NAMES[self]


_NAMES = {F4.ZERO: "0", F4.ONE: "1", F4.W: "w", F4.W2: "1+w"}


def _mul_parts(x: int, y: int) -> int:
    a, b = x & 1, x >> 1
    c, d = y & 1, y >> 1
    # (a + wb)(c + wd) = (ac + bd) + w(ad + bc + bd)
    return ((a & c) ^ (b & d)) | (((a & d) ^ (b & c) ^ (b & d)) << 1)


_MUL = tuple(tuple(_mul_parts(x, y) for y in range(4)) for x in range(4))
_INV = {1: 1, 2: 3, 3: 2}


def f4_add(x: int, y: int) -> F4:
    return F4(x ^ y)


def f4_mul(x: int, y: int) -> F4:
    return F4(_MUL[x][y])


def f4_inv(x: int) -> F4:
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in F4")
    return F4(_INV[x])


def parity(x: int) -> int:
    """Parity of the popcount of ``x``; the F2 dot product of two masks is ``parity(u & v)``."""
    return x.bit_count() & 1


class F4Vector(NamedTuple):
    """Element alpha + w*beta of F4^m."""

    m: int
    alpha: int
    beta: int

    def encode(self) -> int:
        """Canonical integer ``beta * 2^m + alpha`` used for ordering."""
        return (self.beta << self.m) | self.alpha

    @classmethod
    def decode(cls, m: int, code: int) -> "F4Vector":
        mask = (1 << m) - 1
        return cls(m, code & mask, code >> m)

    def is_zero(self) -> bool:
        return self.alpha == 0 and self.beta == 0

    def coordinate(self, i: int) -> F4:
        """Coordinate i (0-based)."""
        return F4.from_parts(self.alpha >> i, self.beta >> i)

    def coordinates(self) -> tuple[F4, ...]:
        return tuple(self.coordinate(i) for i in range(self.m))

    def __add__(self, other):  # type: ignore[override]
        if not isinstance(other, F4Vector):
            return NotImplemented
        _check_same_m(self, other)
        return F4Vector(self.m, self.alpha ^ other.alpha, self.beta ^ other.beta)

    def scale(self, c: int) -> "F4Vector":
        # (c0 + w c1)(alpha + w beta) = (c0 alpha + c1 beta) + w(c0 beta + c1 alpha + c1 beta)
        full = (1 << self.m) - 1
        c0 = full if c & 1 else 0
        c1 = full if c & 2 else 0
        return F4Vector(
            self.m,
            (c0 & self.alpha) ^ (c1 & self.beta),
            (c0 & self.beta) ^ (c1 & self.alpha) ^ (c1 & self.beta),
        )


def f4_vector(m: int, alpha: int, beta: int) -> F4Vector:
    """Validated constructor."""
    if not 1 <= m <= MAX_M:
        raise ValueError(f"m must lie in [1, {MAX_M}], got {m}")
    if alpha >> m or beta >> m or alpha < 0 or beta < 0:
        raise ValueError(f"masks ({alpha}, {beta}) have bits outside the first {m} positions")
    return F4Vector(m, alpha, beta)


def f4_vector_from_coordinates(coords: Sequence[int]) -> F4Vector:
    alpha = beta = 0
    for i, c in enumerate(coords):
        alpha |= (c & 1) << i
        beta |= ((c >> 1) & 1) << i
    return f4_vector(len(coords), alpha, beta)


def _check_same_m(x: F4Vector, y: F4Vector) -> None:
    if x.m != y.m:
        raise ValueError(f"dimension mismatch: {x.m} != {y.m}")


def inner_product(x: F4Vector, y: F4Vector) -> F4:
    """Standard bilinear form sum_i x_i y_i over F4.

    With x = alpha + w beta and y = d1 + w d2 this is
    (alpha.d1 + beta.d2) + w(alpha.d2 + beta.d1 + beta.d2).
    """
    _check_same_m(x, y)
    a, b = x.alpha, x.beta
    d1, d2 = y.alpha, y.beta
    one = parity((a & d1) ^ (b & d2))
    w = parity((a & d2) ^ (b & d1) ^ (b & d2))
    return F4(one | (w << 1))


@dataclass(frozen=True)
class F4Matrix:
    rows: int
    cols: int
    entries: tuple[F4, ...]

    def __post_init__(self) -> None:
        if self.rows * self.cols != len(self.entries):
            raise ValueError("rows * cols must equal the number of entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "F4Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), ncols, tuple(F4(int(e)) for r in rows for e in r))

    def row(self, i: int) -> tuple[F4, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[tuple[F4, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def split(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        """Decompose G = G1 + w G2 into binary matrices (G1, G2)."""
        g1 = tuple(tuple(e.a for e in r) for r in self.to_rows())
        g2 = tuple(tuple(e.b for e in r) for r in self.to_rows())
        return g1, g2

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{str(e):>3}" for e in r) for r in self.to_rows())


def f4_rank(rows: F4Matrix | Iterable[Sequence[int]]) -> int:
    """Rank over F4 by Gaussian elimination with first-nonzero pivots."""
    if isinstance(rows, F4Matrix):
        rows = rows.to_rows()
    work = [[int(e) for e in r] for r in rows]
    work = [r for r in work if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = _INV[work[rank][col]]
        prow = [_MUL[inv][e] for e in work[rank]]
        work[rank] = prow
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [e ^ _MUL[f][p] for e, p in zip(work[i], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


def f4_vectors_rank(vectors: Iterable[F4Vector]) -> int:
    """Rank of the F4-span of a collection of vectors (same m)."""
    basis: dict[int, F4Vector] = {}  # pivot coordinate -> vector with 1 there
    m = None
    for v in set(vectors):
        if m is None:
            m = v.m
        elif v.m != m:
            raise ValueError("dimension mismatch")
        for piv, b in basis.items():
            c = v.coordinate(piv)
            if c:
                v = v + b.scale(c)
        if v.is_zero():
            continue
        low = ((v.alpha | v.beta) & -(v.alpha | v.beta)).bit_length() - 1
        v = v.scale(_INV[v.coordinate(low)])
        # keep the basis fully reduced on pivot coordinates
        for piv in list(basis):
            c = basis[piv].coordinate(low)
            if c:
                basis[piv] = basis[piv] + v.scale(c)
        basis[low] = v
        if len(basis) == m:
            break
    return len(basis)


def _to_row_masks(matrix) -> list[int]:
    out = []
    for r in matrix:
        if isinstance(r, int):
            out.append(r)
            continue
        mask = 0
        for j, e in enumerate(r):
            if int(e) & 1:
                mask |= 1 << j
        out.append(mask)
    return out


def binary_rank(matrix) -> int:
    """Rank over F2. Rows may be bit sequences (or a 2-D array) or int masks."""
    basis: dict[int, int] = {}  # leading bit -> row
    for row in _to_row_masks(matrix):
        while row:
            top = row.bit_length() - 1
            if top not in basis:
                basis[top] = row
                break
            row ^= basis[top]
    return len(basis)

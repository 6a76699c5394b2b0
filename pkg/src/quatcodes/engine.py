"""Codes C_D = {(a.d)_{d in D}} and their exact weight distributions.

The oracle enumerates every message, evaluates each coordinate with bit-sliced
AND + parity, tallies Hamming weights, and divides by the kernel size.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .defining_sets import F2_FIELD, F4_FIELD, DefiningSet, binary_vector
from .gf4 import F4, F4Vector, binary_rank, f4_vectors_rank, inner_product, parity
from .simplicial import SimplicialComplex, chi_complex, complex_size

WORK_BUDGET = 1 << 34
_CHUNK_CELLS = 1 << 21


class BudgetExceededError(RuntimeError):
    pass


class KernelDivisionError(ArithmeticError):
    """A tally was not divisible by the kernel size, so the rank is wrong."""


@dataclass(frozen=True)
class WeightDistribution:
    counts: dict[int, int]
    n: int
    k: int
    q: int = 4

    @property
    def d(self) -> int | None:
        nz = [w for w, c in self.counts.items() if w > 0 and c]
        return min(nz) if nz else None

    @property
    def params(self) -> tuple[int, int, int | None]:
        return self.n, self.k, self.d

    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.counts.items() if w > 0 and c)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "q": self.q,
            "counts": {str(w): c for w, c in sorted(self.counts.items()) if w > 0},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "WeightDistribution":
        counts = {int(w): int(c) for w, c in data["counts"].items()}
        counts.setdefault(0, 1)
        return cls(counts, int(data["n"]), int(data["k"]), int(data.get("q", 4)))


def weight_enumerator_string(wd: WeightDistribution) -> str:
    terms = ["1"] + [f"{wd.counts[w]}z^{w}" for w in wd.nonzero_weights()]
    return "+".join(terms)


def _key_arrays(ds: DefiningSet) -> list[np.ndarray]:
    """Masks K such that coordinate parts are parity(message & K).

    F4 message (alpha, beta) is packed as alpha | beta << m; for d = d1 + w d2
    the 1-part is alpha.d1 + beta.d2 and the w-part alpha.d2 + beta.(d1 + d2).
    """
    if ds.field == F2_FIELD:
        return [np.fromiter(ds.elements, dtype=np.uint64, count=len(ds))]
    m = ds.m
    ky = np.fromiter((e.alpha | (e.beta << m) for e in ds.elements), dtype=np.uint64, count=len(ds))
    kz = np.fromiter((e.beta | ((e.alpha ^ e.beta) << m) for e in ds.elements), dtype=np.uint64, count=len(ds))
    return [ky, kz]


def _check_budget(ds: DefiningSet, budget: int) -> int:
    nmsg = 1 << ds.message_bits()
    work = nmsg * max(len(ds), 1)
    if work > budget:
        raise BudgetExceededError(
            f"{nmsg} messages x {len(ds)} coordinates = {work} evaluations exceeds budget {budget}"
        )
    return nmsg


def _chunk_weights(lo: int, hi: int, keys: list[np.ndarray]) -> np.ndarray:
    msgs = np.arange(lo, hi, dtype=np.uint64)[:, None]
    nz = None
    for key in keys:
        bits = np.bitwise_count(msgs & key[None, :]) & 1
        nz = bits if nz is None else nz | bits
    return nz.sum(axis=1, dtype=np.int64)


def message_weights(ds: DefiningSet, workers: int = 1, budget: int = WORK_BUDGET) -> np.ndarray:
    """Weight of c_D(a) for every message a, indexed by its packed encoding.

    F4 messages alpha + w beta are packed as alpha | beta << m.
    """
    nmsg = _check_budget(ds, budget)
    if len(ds) == 0:
        return np.zeros(nmsg, dtype=np.int64)
    keys = _key_arrays(ds)
    step = max(1, _CHUNK_CELLS // len(ds))
    bounds = [(lo, min(lo + step, nmsg)) for lo in range(0, nmsg, step)]
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _chunk_weights(b[0], b[1], keys), bounds))
    else:
        parts = [_chunk_weights(lo, hi, keys) for lo, hi in bounds]
    return np.concatenate(parts)


def code_dimension(ds: DefiningSet) -> int:
    if ds.field == F4_FIELD:
        return f4_vectors_rank(ds.elements)
    return binary_rank(list(ds.elements))


def weight_distribution_bruteforce(
    ds: DefiningSet, workers: int = 1, budget: int = WORK_BUDGET
) -> WeightDistribution:
    """Exact weight distribution by enumerating every message."""
    weights = message_weights(ds, workers=workers, budget=budget)
    tally = np.bincount(weights, minlength=len(ds) + 1)
    k = code_dimension(ds)
    kernel = ds.q ** (ds.m - k)
    counts = {}
    for w, c in enumerate(tally.tolist()):
        if not c:
            continue
        if c % kernel:
            raise KernelDivisionError(f"weight {w}: tally {c} not divisible by kernel size {kernel}")
        counts[w] = c // kernel
    if counts.get(0) != 1:
        raise KernelDivisionError(f"zero codeword counted {counts.get(0)} times")
    return WeightDistribution(counts, len(ds), k, ds.q)


def parameters(ds: DefiningSet, workers: int = 1) -> tuple[int, int, int | None]:
    return weight_distribution_bruteforce(ds, workers=workers).params


def codeword(a: F4Vector | int, ds: DefiningSet) -> tuple[int, ...]:
    """Evaluation vector (a.d)_{d in D}; F4 entries as :class:`F4`, F2 entries as bits."""
    if ds.field == F4_FIELD:
        if not isinstance(a, F4Vector):
            raise TypeError("F4 codes take an F4Vector message")
        return tuple(inner_product(a, d) for d in ds.elements)
    if a < 0 or a >> ds.m:
        raise ValueError(f"message must be a vector of F2^{ds.m}")
    return tuple(parity(a & d) for d in ds.elements)


def weight_via_character_sums(a: F4Vector, first: SimplicialComplex, second: SimplicialComplex) -> int:
    """Weight of c_D(a) for D = first + w*second from character sums of the complexes."""
    if not (a.m == first.m == second.m):
        raise ValueError("dimension mismatch")
    al, be = a.alpha, a.beta
    ab = al ^ be
    s = (
        chi_complex(al, first) * chi_complex(be, second)
        + chi_complex(be, first) * chi_complex(ab, second)
        + chi_complex(ab, first) * chi_complex(al, second)
    )
    total = 3 * complex_size(first) * complex_size(second) - s
    if total % 4:
        raise ArithmeticError("character-sum weight is not an integer")
    return total // 4


def dual_min_distance_leq(ds: DefiningSet | Sequence[int], t: int = 3) -> int | None:
    """Smallest s <= t such that some s columns of the binary generator matrix are dependent.

    Equivalently the minimum distance of the dual code when it is at most t.
    Returns None when every set of at most t columns is independent.
    """
    if isinstance(ds, DefiningSet):
        if ds.field != F2_FIELD:
            raise ValueError("column search needs a binary defining set")
        cols = list(ds.elements)
    else:
        cols = list(ds)
    if not 1 <= t <= 4:
        raise ValueError("t must lie in [1, 4]")
    if any(c == 0 for c in cols):
        return 1
    if t < 2:
        return None
    colset = set(cols)
    if len(colset) < len(cols):
        return 2
    if t < 3:
        return None
    uniq = sorted(colset)
    for i, ci in enumerate(uniq):
        for cj in uniq[i + 1:]:
            if ci ^ cj in colset:
                return 3
    if t < 4:
        return None
    # no s <= 3, so any collision of two distinct pair sums uses four distinct columns
    seen: set[int] = set()
    for i, ci in enumerate(uniq):
        for cj in uniq[i + 1:]:
            x = ci ^ cj
            if x in seen:
                return 4
            seen.add(x)
    return None


@dataclass(frozen=True)
class BinaryCode:
    n: int
    codewords: tuple[tuple[int, ...], ...]
    k: int = field(default=0)

    def __contains__(self, word) -> bool:
        return tuple(word) in self.codewords


def subfield_subcode(ds: DefiningSet, budget: int = WORK_BUDGET) -> BinaryCode:
    """Codewords of C_D with every coordinate in F2 (intersection with F2^n)."""
    if ds.field != F4_FIELD:
        raise ValueError("subfield subcode requires an F4 defining set")
    _check_budget(ds, budget)
    n = len(ds)
    if n == 0:
        return BinaryCode(0, ((),), 0)
    ky, kz = _key_arrays(ds)
    words: set[int] = set()
    nmsg = 1 << ds.message_bits()
    step = max(1, _CHUNK_CELLS // n)
    weights = 1 << np.arange(n, dtype=object)
    for lo in range(0, nmsg, step):
        msgs = np.arange(lo, min(lo + step, nmsg), dtype=np.uint64)[:, None]
        wpart = np.bitwise_count(msgs & kz[None, :]) & 1
        ok = ~wpart.any(axis=1)
        if not ok.any():
            continue
        ones = (np.bitwise_count(msgs[ok] & ky[None, :]) & 1).astype(object)
        words.update(int(x) for x in ones.dot(weights))
    ordered = sorted(words)
    return BinaryCode(n, tuple(binary_vector(w, n) for w in ordered), binary_rank(ordered))


def f4_codeword_str(word: Sequence[int]) -> str:
    return "(" + ",".join(str(F4(x)) for x in word) + ")"

"""Griesmer and sphere-packing bounds, and a classifier on top of them."""

from __future__ import annotations

import csv
from dataclasses import asdict, dataclass
from math import comb, lgamma, log, log2
from pathlib import Path

BestKnownTable = dict[tuple[int, int, int], int]


def griesmer_min_length(k: int, d: int, q: int) -> int:
    """sum_{i<k} ceil(d / q^i)."""
    if k < 0 or d < 0 or q < 2:
        raise ValueError("need k >= 0, d >= 0, q >= 2")
    return sum(-(-d // q**i) for i in range(k))


def sphere_volume(n: int, radius: int, q: int) -> int:
    return sum(comb(n, i) * (q - 1) ** i for i in range(radius + 1))


def _log2_volume_bracket(n: int, radius: int, q: int) -> tuple[float, float]:
    """Bounds on log2 of the sphere volume from its largest term T: T <= V <= (r+1) T."""
    # terms increase while i < ((q-1) n - 1) / q
    peak = min(radius, max(0, ((q - 1) * n - 1) // q + 1))
    ln_term = lgamma(n + 1) - lgamma(peak + 1) - lgamma(n - peak + 1) + peak * log(q - 1)
    lo = ln_term / log(2)
    return lo, lo + log2(radius + 1)


def _compare_volume(n: int, k: int, d: int, q: int) -> int:
    """Sign of volume - q^(n-k); exact whenever the float bracket is inconclusive."""
    if d < 1:
        raise ValueError("d must be positive")
    radius = (d - 1) // 2
    target = (n - k) * log2(q)
    lo, hi = _log2_volume_bracket(n, radius, q)
    slack = 1e-9 * max(1.0, target) + 1e-6
    if hi < target - slack:
        return -1
    if lo > target + slack:
        return 1
    vol, rhs = sphere_volume(n, radius, q), q ** (n - k)
    return (vol > rhs) - (vol < rhs)


def sphere_packing_holds(n: int, k: int, d: int, q: int) -> bool:
    return _compare_volume(n, k, d, q) <= 0


def is_perfect(n: int, k: int, d: int, q: int) -> bool:
    return _compare_volume(n, k, d, q) == 0


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    d: int
    q: int
    griesmer_min_n: int
    griesmer_code: bool  # Griesmer sum at d equals n
    griesmer_met: bool  # Griesmer rules out an [n, k, d+1] code
    sphere_packing_ok: bool
    perfect: bool
    sphere_packing_excludes_d_plus_1: bool
    best_d_from_table: int | None = None
    # None means neither the bounds nor a table settle the question
    distance_optimal: bool | None = None
    almost_optimal: bool | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def classify(n: int, k: int, d: int, q: int, table: BestKnownTable | None = None) -> BoundReport:
    gmin = griesmer_min_length(k, d, q)
    griesmer_code = gmin == n
    griesmer_met = griesmer_code or griesmer_min_length(k, d + 1, q) > n
    sp_ok = sphere_packing_holds(n, k, d, q)
    sp_next = not sphere_packing_holds(n, k, d + 1, q)
    best = table.get((q, n, k)) if table else None

    optimal: bool | None = True if (griesmer_met or sp_next) else None
    almost: bool | None = None
    if best is not None:
        if best > d:
            optimal = False
        elif best == d:
            optimal = True
        almost = best == d + 1 or bool(optimal)
    elif optimal:
        almost = True
    elif not sphere_packing_holds(n, k, d + 2, q) or griesmer_min_length(k, d + 2, q) > n:
        # an [n, k, d+1] code would be optimal
        almost = True
    return BoundReport(
        n=n,
        k=k,
        d=d,
        q=q,
        griesmer_min_n=gmin,
        griesmer_code=griesmer_code,
        griesmer_met=griesmer_met,
        sphere_packing_ok=sp_ok,
        perfect=is_perfect(n, k, d, q),
        sphere_packing_excludes_d_plus_1=sp_next,
        best_d_from_table=best,
        distance_optimal=optimal,
        almost_optimal=almost,
    )


def load_best_known_table(path: str | Path) -> BestKnownTable:
    """Read a CSV with header ``q,n,k,best_d``."""
    table: BestKnownTable = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = {"q", "n", "k", "best_d"} - set(reader.fieldnames or ())
        if missing:
            raise ValueError(f"best-known table is missing columns: {sorted(missing)}")
        for row in reader:
            key = (int(row["q"]), int(row["n"]), int(row["k"]))
            table[key] = int(row["best_d"])
    return table

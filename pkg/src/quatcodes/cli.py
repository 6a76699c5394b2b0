"""Command-line front end.

Exit codes: 0 ok, 2 formula/oracle mismatch, 3 work budget exceeded, 4 bad flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, fields
from typing import Sequence

from .bounds import classify, load_best_known_table
from .closed_forms import (
    AdmissibilityError,
    TheoremPrediction,
    diff_distributions,
    family_for,
    with_zero_coordinate,
)
from .defining_sets import (
    DefiningSet,
    binary_vector,
    complement,
    generator_matrix,
    parse_binary_vectors,
    product_set,
    puncture_zero,
    subfield_defining_set,
    subfield_generator_matrix,
)
from .engine import (
    WORK_BUDGET,
    BudgetExceededError,
    WeightDistribution,
    subfield_subcode,
    weight_distribution_bruteforce,
    weight_enumerator_string,
)
from .simplicial import (
    SimplicialComplex,
    complex_size,
    count_u_classes,
    indices_of,
    normalize,
    parse_complex,
    u_class_cardinalities,
)

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_BUDGET = 3
EXIT_USAGE = 4

VARIANTS = ("product", "punctured", "complement")
MODES = ("oracle", "formula", "verify")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunSpec:
    command: str
    m: int | None = None
    A: str | None = None
    B: str | None = None
    delta_shared: bool = False
    variant: str = "punctured"
    subfield: bool = False
    mode: str = "oracle"
    format: str = "text"
    strict_paper: bool = False
    table: str | None = None
    workers: int = 1
    budget: int = WORK_BUDGET
    m_max: int | None = None
    verify: bool = False
    D1: str | None = None
    D2: str | None = None

    def validate(self) -> None:
        if self.command not in ("wdist", "scan", "subfield"):
            raise UsageError(f"unknown command {self.command!r}")
        if self.variant not in VARIANTS:
            raise UsageError(f"--variant must be one of {VARIANTS}")
        if self.mode not in MODES:
            raise UsageError(f"--mode must be one of {MODES}")
        if self.format not in ("text", "json"):
            raise UsageError("--format must be text or json")
        if self.workers < 1 or self.budget < 1:
            raise UsageError("--workers and --budget must be positive")
        if self.m is not None and not 1 <= self.m <= 16:
            raise UsageError("--m must lie in [1, 16]")
        if self.command == "wdist":
            if self.m is None or self.A is None or self.B is None:
                raise UsageError("wdist needs --m, --A and --B")
        elif self.command == "scan":
            if self.m is None:
                raise UsageError("scan needs --m")
            if self.m_max is not None and self.m_max < self.m:
                raise UsageError("--m-max must be at least --m")
        else:
            explicit = self.D1 is not None or self.D2 is not None
            if explicit and (self.D1 is None or self.D2 is None):
                raise UsageError("--D1 and --D2 go together")
            if not explicit and (self.m is None or self.A is None or self.B is None):
                raise UsageError("subfield needs --D1/--D2 or --m/--A/--B")

    @classmethod
    def from_dict(cls, data: dict) -> "RunSpec":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown run fields {sorted(unknown)}")
        return cls(**data)


# ---------------------------------------------------------------------------
# wdist


def _complexes(spec: RunSpec) -> tuple[SimplicialComplex, SimplicialComplex]:
    assert spec.m is not None and spec.A is not None and spec.B is not None
    try:
        first = parse_complex(spec.A, spec.m)
        second = parse_complex(spec.B, spec.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if spec.delta_shared:
        shared = normalize(list(first.maximal_faces) + list(second.maximal_faces), spec.m)
        return shared, shared
    return first, second


def expected_length(spec: RunSpec) -> int:
    assert spec.m is not None
    first, second = _complexes(spec)
    size = complex_size(first) * complex_size(second)  # always contains 0
    return {"product": size, "punctured": size - 1, "complement": 4**spec.m - size}[spec.variant]


def build_defining_set(spec: RunSpec) -> DefiningSet:
    assert spec.m is not None
    n = expected_length(spec)
    if n == 0:
        raise UsageError("the defining set is empty, so the code has length 0")
    work = 4**spec.m * n
    if work > spec.budget:
        raise BudgetExceededError(
            f"{4**spec.m} messages x {n} coordinates = {work} evaluations exceeds budget {spec.budget}"
        )
    first, second = _complexes(spec)
    ds = product_set(first, second)
    if spec.variant == "punctured":
        ds = puncture_zero(ds)
    elif spec.variant == "complement":
        ds = complement(ds)
    if spec.subfield:
        ds = subfield_defining_set(ds)
    if len(ds) == 0:
        raise UsageError("the defining set is empty, so the code has length 0")
    return ds


def _closed_form_faces(spec: RunSpec) -> tuple[bool, int, int]:
    first, second = _complexes(spec)
    if spec.delta_shared:
        faces = first.maximal_faces
        if len(faces) == 1:
            return False, faces[0], faces[0]
        if len(faces) == 2:
            return True, faces[0], faces[1]
        raise UsageError("closed forms cover complexes with at most two maximal faces")
    if len(first.maximal_faces) != 1 or len(second.maximal_faces) != 1:
        raise UsageError("closed forms for D1 + w D2 need single-face complexes; use --mode oracle")
    return False, first.maximal_faces[0], second.maximal_faces[0]


def predict(spec: RunSpec) -> TheoremPrediction:
    assert spec.m is not None
    shared, a, b = _closed_form_faces(spec)
    family = family_for(shared, spec.variant, spec.subfield)
    try:
        pred = family.predict(a, b, spec.m, literal=spec.strict_paper)
    except AdmissibilityError as exc:
        raise UsageError(str(exc)) from exc
    if spec.variant == "product":
        pred = with_zero_coordinate(pred)
    return pred


def _u_class_report(spec: RunSpec) -> dict | None:
    shared, a, b = _closed_form_faces(spec)
    if not shared:
        return None
    assert spec.m is not None
    return {
        "closed_form": list(u_class_cardinalities(a, b, spec.m, literal=spec.strict_paper)),
        "enumerated": list(count_u_classes(a, b, spec.m)),
    }


def _bounds(wd: WeightDistribution, table: dict | None) -> dict | None:
    if wd.d is None:
        return None
    return classify(wd.n, wd.k, wd.d, wd.q, table).to_dict()


def _load_table(spec: RunSpec) -> dict | None:
    if spec.table is None:
        return None
    try:
        return load_best_known_table(spec.table)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read table {spec.table}: {exc}") from exc


def run_wdist(spec: RunSpec) -> tuple[dict, int]:
    table = _load_table(spec)
    result: dict = {"run": asdict(spec)}
    oracle = formula = None
    if spec.mode in ("oracle", "verify"):
        ds = build_defining_set(spec)
        oracle = weight_distribution_bruteforce(ds, workers=spec.workers, budget=spec.budget)
        result["oracle"] = oracle.to_dict()
    if spec.mode in ("formula", "verify"):
        formula = predict(spec)
        result["formula"] = formula.to_dict()
    code = EXIT_OK
    if spec.mode == "verify":
        assert oracle is not None and formula is not None
        diffs = diff_distributions(formula.to_weight_distribution(), oracle)
        ucls = _u_class_report(spec)
        if ucls is not None:
            result["u_classes"] = ucls
            if ucls["closed_form"] != ucls["enumerated"]:
                diffs.append(f"U-class sizes: closed form {ucls['closed_form']}, enumerated {ucls['enumerated']}")
        result["match"] = not diffs
        result["diffs"] = diffs
        code = EXIT_OK if not diffs else EXIT_MISMATCH
    main_wd = oracle if oracle is not None else formula.to_weight_distribution()  # type: ignore[union-attr]
    result["bounds"] = _bounds(main_wd, table)
    return result, code


def _render_wdist(result: dict) -> str:
    run = result["run"]
    lines = []
    kind = "delta-shared" if run["delta_shared"] else "product"
    field = "F2 subfield code" if run["subfield"] else "F4"
    lines.append(f"code: m={run['m']} A={run['A']} B={run['B']} ({kind}, {run['variant']}), {field}")
    for key in ("oracle", "formula"):
        if key not in result:
            continue
        wd = WeightDistribution.from_dict(result[key])
        label = key if key == "oracle" else f"formula [{result[key]['theorem_id']}]"
        lines.append(f"{label}: [{wd.n},{wd.k},{wd.d}] {weight_enumerator_string(wd)}")
    if "match" in result:
        lines.append("verify: match" if result["match"] else "verify: MISMATCH")
        lines.extend(f"  {d}" for d in result["diffs"])
    b = result.get("bounds")
    if b:
        lines.append(
            "bounds: griesmer_min_n={griesmer_min_n} griesmer_code={griesmer_code} "
            "griesmer_met={griesmer_met} sphere_packing_ok={sphere_packing_ok} perfect={perfect}".format(**b)
        )
        if b["best_d_from_table"] is not None:
            lines.append(
                f"table: best d={b['best_d_from_table']} optimal={b['distance_optimal']} "
                f"almost_optimal={b['almost_optimal']}"
            )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# scan


def canonical_classes(m: int):
    """One (A, B) per (|A|, |B|, |A n B|) with |A| >= |B|, skipping A = B = [m]."""
    for a in range(m + 1):
        for b in range(a + 1):
            for c in range(max(0, a + b - m), b + 1):
                if a == b == m:
                    continue
                A = (1 << a) - 1
                B = ((1 << b) - 1) << (a - c)
                yield A, B


def _face_text(mask: int) -> str:
    return ",".join(map(str, indices_of(mask))) or "-"


def run_scan(spec: RunSpec) -> tuple[dict, int]:
    assert spec.m is not None
    table = _load_table(spec)
    rows = []
    code = EXIT_OK
    for m in range(spec.m, (spec.m_max or spec.m) + 1):
        for A, B in canonical_classes(m):
            sub = RunSpec("wdist", m, _face_text(A), _face_text(B), variant="complement",
                          subfield=spec.subfield, mode="formula", budget=spec.budget, workers=spec.workers)
            pred = predict(sub)
            report = classify(pred.n, pred.k, pred.d, pred.q, table) if pred.d else None
            row = {
                "m": m,
                "A": _face_text(A),
                "B": _face_text(B),
                "n": pred.n,
                "k": pred.k,
                "d": pred.d,
                "weights": pred.flags["weights"],
                "griesmer_code": pred.flags["griesmer_code"],
                "best_d": report.best_d_from_table if report else None,
                "star": bool(report and report.best_d_from_table is not None and report.best_d_from_table == pred.d),
            }
            if spec.verify:
                sub.mode = "verify"
                res, rc = run_wdist(sub)
                row["verified"] = rc == EXIT_OK
                if rc != EXIT_OK:
                    code = EXIT_MISMATCH
            rows.append(row)
    return {"run": asdict(spec), "rows": rows}, code


def _render_scan(result: dict) -> str:
    lines = [f"{'m':>2} {'A':>10} {'B':>10}  {'[n,k,d]':<16} {'wts':>3}  flags"]
    for r in result["rows"]:
        params = f"[{r['n']},{r['k']},{r['d']}]" + ("*" if r["star"] else "")
        flags = []
        if r["griesmer_code"]:
            flags.append("griesmer")
        if r["best_d"] is not None and not r["star"]:
            flags.append(f"best_d={r['best_d']}")
        if "verified" in r:
            flags.append("verified" if r["verified"] else "MISMATCH")
        lines.append(f"{r['m']:>2} {r['A']:>10} {r['B']:>10}  {params:<16} {r['weights']:>3}  {' '.join(flags)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subfield


def _subfield_set(spec: RunSpec) -> DefiningSet:
    if spec.D1 is not None:
        try:
            d1 = parse_binary_vectors(spec.D1)
            d2 = parse_binary_vectors(spec.D2 or "")
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        lengths = {len(w.strip()) for w in (spec.D1 + "," + (spec.D2 or "")).split(",")}
        if len(lengths) != 1:
            raise UsageError("all binary vectors must have the same length")
        m = lengths.pop()
        if spec.m is not None and spec.m != m:
            raise UsageError(f"--m {spec.m} disagrees with vector length {m}")
        return product_set(d1, d2, m)
    wd_spec = RunSpec("wdist", spec.m, spec.A, spec.B, delta_shared=spec.delta_shared, variant=spec.variant)
    return build_defining_set(wd_spec)


def _bits(rows) -> list[str]:
    return ["".join(str(int(x)) for x in r) for r in rows]


def run_subfield(spec: RunSpec) -> tuple[dict, int]:
    ds = _subfield_set(spec)
    g = generator_matrix(ds)
    g1, g2 = g.split()
    g_sub = subfield_generator_matrix(g)
    d_sub = subfield_defining_set(ds)
    quaternary = weight_distribution_bruteforce(ds, workers=spec.workers, budget=spec.budget)
    binary = weight_distribution_bruteforce(d_sub, workers=spec.workers, budget=spec.budget)
    subcode = subfield_subcode(ds, budget=spec.budget)
    result = {
        "run": asdict(spec),
        "G": [[str(e) for e in r] for r in g.to_rows()],
        "G1": _bits(g1),
        "G2": _bits(g2),
        "G2_stacked": _bits(g_sub),
        "D2": _bits(binary_vector(v, d_sub.m) for v in d_sub.elements),
        "quaternary": quaternary.to_dict(),
        "subfield": binary.to_dict(),
        "subfield_subcode": {"k": subcode.k, "codewords": _bits(subcode.codewords) if subcode.k <= 6 else None},
    }
    return result, EXIT_OK


def _render_subfield(result: dict) -> str:
    lines = ["G =", *("  " + " ".join(f"{e:>3}" for e in r) for r in result["G"])]
    lines += ["G1 =", *("  " + r for r in result["G1"])]
    lines += ["G2 =", *("  " + r for r in result["G2"])]
    lines += ["G^(2) = [G2; G1+G2] =", *("  " + r for r in result["G2_stacked"])]
    lines.append("D^(2) = {" + ", ".join("(" + ",".join(v) + ")" for v in result["D2"]) + "}")
    for key, label in (("quaternary", "quaternary code"), ("subfield", "subfield code")):
        wd = WeightDistribution.from_dict(result[key])
        lines.append(f"{label}: [{wd.n},{wd.k},{wd.d}] {weight_enumerator_string(wd)}")
    sc = result["subfield_subcode"]
    words = sc["codewords"]
    lines.append(f"subfield subcode: dimension {sc['k']}" + (": {" + ", ".join(words) + "}" if words is not None else ""))
    return "\n".join(lines)


# ---------------------------------------------------------------------------


_RUNNERS = {
    "wdist": (run_wdist, _render_wdist),
    "scan": (run_scan, _render_scan),
    "subfield": (run_subfield, _render_subfield),
}


def execute(spec: RunSpec) -> tuple[str, int]:
    spec.validate()
    runner, render = _RUNNERS[spec.command]
    result, code = runner(spec)
    text = json.dumps(result, sort_keys=True) if spec.format == "json" else render(result)
    return text, code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quatcodes", description="Quaternary codes from simplicial complexes.")
    sub = parser.add_subparsers(dest="command")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--workers", type=int, default=1, help="threads for brute-force enumeration")
        p.add_argument("--budget", type=int, default=WORK_BUDGET, help="max coordinate evaluations")
        p.add_argument("--table", help="CSV of best-known codes with columns q,n,k,best_d")

    complex_help = "maximal faces, e.g. '1,2,3;3,4'; '-' is the empty face"

    w = sub.add_parser("wdist", help="weight distribution of one code")
    w.add_argument("--m", type=int)
    w.add_argument("--A", help=complex_help)
    w.add_argument("--B", help=complex_help)
    w.add_argument("--delta-shared", action="store_true",
                   help="D = Delta + w Delta where Delta has the faces of --A and --B")
    w.add_argument("--variant", choices=VARIANTS, default="punctured")
    w.add_argument("--subfield", action="store_true", help="binary subfield code instead")
    w.add_argument("--mode", choices=MODES, default="oracle")
    w.add_argument("--strict-paper", action="store_true",
                   help="evaluate the uncorrected reference expressions, which differ from the oracle on known rows")
    w.add_argument("--from-json", metavar="FILE", help="replay the run recorded in a JSON output ('-' for stdin)")
    common(w)

    s = sub.add_parser(
        "scan",
        help="parameters of complement codes over canonical (A, B)",
        description="Enumerates complement codes of Delta_A + w Delta_B for m in [--m, --m-max]. Every closed "
        "form depends on A and B only through |A|, |B| and |A n B|, so one representative per triple "
        "(with |A| >= |B|) is listed; A = B = [m] is skipped.",
    )
    s.add_argument("--m", type=int)
    s.add_argument("--m-max", type=int)
    s.add_argument("--subfield", action="store_true")
    s.add_argument("--verify", action="store_true", help="check every row against brute force")
    common(s)

    f = sub.add_parser("subfield", help="generator matrices and defining set of the subfield code")
    f.add_argument("--D1", help="binary vectors such as '01,10' (coordinate 1 first), in column order")
    f.add_argument("--D2", help="binary vectors, inner loop of the column order")
    f.add_argument("--m", type=int)
    f.add_argument("--A", help=complex_help)
    f.add_argument("--B", help=complex_help)
    f.add_argument("--delta-shared", action="store_true")
    f.add_argument("--variant", choices=VARIANTS, default="product")
    common(f)
    return parser


def _spec_from_args(ns: argparse.Namespace) -> RunSpec:
    data = {k: v for k, v in vars(ns).items() if k in {f.name for f in fields(RunSpec)} and v is not None}
    return RunSpec(**data)


def _replay(path: str) -> RunSpec:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        data = json.loads(text)
        return RunSpec.from_dict(data["run"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot replay {path}: {exc}") from exc


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        spec = _replay(ns.from_json) if getattr(ns, "from_json", None) else _spec_from_args(ns)
        text, code = execute(spec)
    except BudgetExceededError as exc:
        print(f"quatcodes: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, AdmissibilityError) as exc:
        print(f"quatcodes: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Quaternary linear codes from simplicial complexes and their binary subfield codes."""

from .bounds import BoundReport, classify, griesmer_min_length, load_best_known_table, sphere_packing_holds
from .closed_forms import FAMILIES, AdmissibilityError, TheoremPrediction, oracle_set
from .defining_sets import DefiningSet, complement, product_set, puncture_zero, subfield_defining_set
from .engine import (
    BudgetExceededError,
    WeightDistribution,
    dual_min_distance_leq,
    subfield_subcode,
    weight_distribution_bruteforce,
)
from .gf4 import F4, F4Matrix, F4Vector, inner_product
from .simplicial import SimplicialComplex, parse_complex

__all__ = [
    "AdmissibilityError",
    "BoundReport",
    "BudgetExceededError",
    "DefiningSet",
    "F4",
    "F4Matrix",
    "F4Vector",
    "FAMILIES",
    "SimplicialComplex",
    "TheoremPrediction",
    "WeightDistribution",
    "classify",
    "complement",
    "dual_min_distance_leq",
    "griesmer_min_length",
    "inner_product",
    "load_best_known_table",
    "oracle_set",
    "parse_complex",
    "product_set",
    "puncture_zero",
    "sphere_packing_holds",
    "subfield_defining_set",
    "subfield_subcode",
    "weight_distribution_bruteforce",
]

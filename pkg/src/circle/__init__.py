"""Circle-method machinery: arcs, exponential sums over primes and the I/J/R integrals."""

from src.circle.arcs import (
    ArcClass,
    ArcLabel,
    ArcParams,
    bound_Z,
    classify_alpha,
    dissect_arcs,
    farey_sequence,
    major_measure,
    minor_bound,
    minor_intervals,
)
from src.circle.exponential import (
    ExpSumSample,
    MinorArcReport,
    exp_sum_grid,
    exp_sum_primes,
    lemma4_probe,
    minor_arc_ratios,
    rep_count_via_orthogonality,
)
from src.circle.integrals import (
    LatticeCount,
    integral_I,
    integral_J,
    integral_R,
    lattice_representations,
    main_term_integral,
)

__all__ = [
    "ArcClass",
    "ArcLabel",
    "ArcParams",
    "bound_Z",
    "classify_alpha",
    "dissect_arcs",
    "farey_sequence",
    "major_measure",
    "minor_bound",
    "minor_intervals",
    "ExpSumSample",
    "MinorArcReport",
    "exp_sum_grid",
    "exp_sum_primes",
    "lemma4_probe",
    "minor_arc_ratios",
    "rep_count_via_orthogonality",
    "LatticeCount",
    "integral_I",
    "integral_J",
    "integral_R",
    "lattice_representations",
    "main_term_integral",
]

"""Exact independent-set counting, partial-join spectra, and constructions.

Thin Python layer over the C++ core.  All counts are exact: arbitrary-
precision values cross the boundary as Python ints.
"""

from ._core import (
    CeilingError,
    ValidationError,
    binary_entropy,
    build_avoider,
    census,
    check_avoider,
    choose_m,
    closed_form_anchor,
    count,
    count_brute,
    encode_value,
    entropy_sandwich_holds,
    independence_polynomial,
    matching_bound_audit,
    path_graph6,
    plan_combination,
    run_cli,
    solve_mu0,
    spectrum,
    spectrum_gap_report,
    upper_bound_eval,
)

__all__ = [
    "CeilingError",
    "ValidationError",
    "binary_entropy",
    "build_avoider",
    "census",
    "check_avoider",
    "choose_m",
    "closed_form_anchor",
    "count",
    "count_brute",
    "encode_value",
    "entropy_sandwich_holds",
    "independence_polynomial",
    "matching_bound_audit",
    "path_graph6",
    "plan_combination",
    "run_cli",
    "solve_mu0",
    "spectrum",
    "spectrum_gap_report",
    "upper_bound_eval",
]

__version__ = "0.1.0"

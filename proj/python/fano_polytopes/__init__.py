"""Exact classification of Fano polytopes in Z^3."""

import json

from ._core import (
    DegenerateInput,
    InvariantViolation,
    Polytope,
    are_equivalent,
    barycentric_of_origin,
    canonical_form,
    children,
    classify,
    enumerate_fano_tetrahedra,
    enumerate_minimal_polytopes,
    enumerate_weight_systems,
    fractional_sum,
    is_fano,
    is_maximal,
    is_minimal,
    is_simplicial,
    is_smooth,
    lattice_points,
    normalized_volume,
    search_h_bound,
    stats,
    verify,
)


def records(jobs=1):
    """The classification as a list of dicts (same fields as the JSON output)."""
    return json.loads(classify(jobs=jobs, format="json"))


__all__ = [
    "DegenerateInput",
    "InvariantViolation",
    "Polytope",
    "are_equivalent",
    "barycentric_of_origin",
    "canonical_form",
    "children",
    "classify",
    "enumerate_fano_tetrahedra",
    "enumerate_minimal_polytopes",
    "enumerate_weight_systems",
    "fractional_sum",
    "is_fano",
    "is_maximal",
    "is_minimal",
    "is_simplicial",
    "is_smooth",
    "lattice_points",
    "normalized_volume",
    "records",
    "search_h_bound",
    "stats",
    "verify",
]

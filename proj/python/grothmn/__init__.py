"""Murnaghan-Nakayama rules for stable and canonical Grothendieck polynomials."""

from ._core import (
    DivisibilityError,
    InvalidInput,
    check_lemma,
    check_theorem_stable,
    count_tableaux,
    enumerate_mn_outer,
    expand,
    expand_render,
    max_nw_ribbon_size,
    poly,
    poly_text,
    shape_stats,
    tableau_statistics,
    tableaux,
    verify,
)

__all__ = [
    "DivisibilityError",
    "InvalidInput",
    "check_lemma",
    "check_theorem_stable",
    "count_tableaux",
    "enumerate_mn_outer",
    "expand",
    "expand_render",
    "max_nw_ribbon_size",
    "poly",
    "poly_text",
    "shape_stats",
    "tableau_statistics",
    "tableaux",
    "verify",
]

"""Exact Euler characteristics of quiver Grassmannians.

For representations in which every arrow matrix has at most one nonzero entry
per row and per column, chi_e equals the number of successor-closed subquivers
of the coefficient quiver with prescribed vertex counts.  This package exposes
the exact counting routines, string-module classification, torus-weight degree
certificates, and the closed forms for the affine cyclic-quiver families.
"""

from ._core import (
    Representation,
    binom,
    certify_degrees,
    chi,
    chi_flag,
    chi_kronecker_preinjective,
    chi_kronecker_preprojective,
    chi_kronecker_regular,
    chi_preinjective,
    chi_preprojective,
    chi_regular,
    chi_table,
    classify,
    family,
    fixture,
    load_representation,
    representation_from_json,
    save_representation,
    to_dot,
    verify,
)

__version__ = "1.0.0"

__all__ = [
    "Representation",
    "binom",
    "certify_degrees",
    "chi",
    "chi_flag",
    "chi_kronecker_preinjective",
    "chi_kronecker_preprojective",
    "chi_kronecker_regular",
    "chi_preinjective",
    "chi_preprojective",
    "chi_regular",
    "chi_table",
    "classify",
    "family",
    "fixture",
    "load_representation",
    "representation_from_json",
    "save_representation",
    "to_dot",
    "verify",
]

"""Ordinal notations, stabilizing arrays and linear order embeddings.

Terms, orders and arrays are passed in their text forms, e.g.
``compare_omega("fin:2", "w(1)", "w(1 0)") == "LT"``.
"""

from ._core import (
    Error,
    compare_omega,
    compare_theta,
    embeds,
    enumerate_omega,
    finite_suborder_check,
    fraisse_pair,
    good_pair,
    homogeneous_set,
    theta_coefficients,
    theta_descend,
    theta_validate,
    three_antichain_good_pair,
)

__all__ = [
    "Error",
    "compare_omega",
    "compare_theta",
    "embeds",
    "enumerate_omega",
    "finite_suborder_check",
    "fraisse_pair",
    "good_pair",
    "homogeneous_set",
    "theta_coefficients",
    "theta_descend",
    "theta_validate",
    "three_antichain_good_pair",
]

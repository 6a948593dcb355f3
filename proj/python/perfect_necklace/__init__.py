"""Lexicographically greatest (n,k)-perfect necklaces via Lyndon pairs."""

from perfect_necklace._core import (
    CapacityError,
    Mode,
    NoPredecessorError,
    Pair,
    Params,
    brute_force_greatest,
    build_necklace,
    check_perfect,
    cmp_succ,
    expand,
    fkm_reference,
    is_maximal,
    lyndon_list,
    maximal_list,
    necklace_length,
    reduce,
    rotate_left,
    rotate_right,
    rotation_class,
    theta,
    theta_preimage,
)

__all__ = [
    "CapacityError",
    "Mode",
    "NoPredecessorError",
    "Pair",
    "Params",
    "brute_force_greatest",
    "build_necklace",
    "check_perfect",
    "cmp_succ",
    "expand",
    "fkm_reference",
    "is_maximal",
    "lyndon_list",
    "maximal_list",
    "necklace_length",
    "reduce",
    "rotate_left",
    "rotate_right",
    "rotation_class",
    "theta",
    "theta_preimage",
]

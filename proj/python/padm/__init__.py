"""Admissible gradings and admissible pairs for nilpotent elements of
classical complex simple Lie algebras: exact rational checks, blockwise pair
construction, connectivity and equivalence certificates.

All rational scalars cross the boundary as strings like "3/2" or "-4".
"""

from padm._core import (
    Algebra,
    Element,
    Grading,
    Subspace,
    adapted_triple,
    b_optimal_chain,
    breakpoints,
    check_pair,
    classify,
    connect_to_dynkin,
    construct_pair,
    exceptional_rank1_table,
    is_admissible_grading,
    is_b_optimal,
    is_good_grading,
    isotypic_blocks,
    optimal_pair,
    two_level_chain,
    verify_certificate,
)

__all__ = [
    "Algebra",
    "Element",
    "Grading",
    "Subspace",
    "adapted_triple",
    "b_optimal_chain",
    "breakpoints",
    "check_pair",
    "classify",
    "connect_to_dynkin",
    "construct_pair",
    "exceptional_rank1_table",
    "is_admissible_grading",
    "is_b_optimal",
    "is_good_grading",
    "isotypic_blocks",
    "optimal_pair",
    "two_level_chain",
    "verify_certificate",
]

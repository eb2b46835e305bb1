"""Exact statistics, q-polynomials and verification sweeps for ordered set partitions."""

__version__ = "0.1.0"

from .qpoly import LaurentPoly, NotDivisible, exact_div, invert_q, q_binom, q_fact, q_int
from .combinat import (
    MarkedPermutation,
    OrderedSetPartition,
    SetPartition,
    gen_binary_words,
    gen_ordered_partitions,
    gen_permutations,
    gen_permutations_by_des,
    gen_set_partitions,
)
from .qnumbers import (
    check_aq_duality,
    q_eulerian,
    q_stirling_def,
    q_stirling_rec,
    q_stirling_tilde,
)
from .stats import CoordinateProfile, coordinate_profile, mak_d, maj_by_right_descents, perm_stat, stat
from .biject import (
    LengthMismatch,
    blocks_to_perm_decreasing,
    complement,
    cut,
    descent_blocks,
    perm_mak,
    reverse_blocks,
    reverse_cut_mil,
    uncut,
)

__all__ = [
    "__version__",
    "LaurentPoly",
    "NotDivisible",
    "exact_div",
    "invert_q",
    "q_binom",
    "q_fact",
    "q_int",
    "MarkedPermutation",
    "OrderedSetPartition",
    "SetPartition",
    "gen_binary_words",
    "gen_ordered_partitions",
    "gen_permutations",
    "gen_permutations_by_des",
    "gen_set_partitions",
    "check_aq_duality",
    "q_eulerian",
    "q_stirling_def",
    "q_stirling_rec",
    "q_stirling_tilde",
    "CoordinateProfile",
    "coordinate_profile",
    "mak_d",
    "maj_by_right_descents",
    "perm_stat",
    "stat",
    "LengthMismatch",
    "blocks_to_perm_decreasing",
    "complement",
    "cut",
    "descent_blocks",
    "perm_mak",
    "reverse_blocks",
    "reverse_cut_mil",
    "uncut",
]

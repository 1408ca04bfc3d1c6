"""Balanced de Bruijn-like necklaces of arbitrary length."""

from .generate import DigitExpansion, digits_base_k, generate_p2l, generate_pkl, generate_steps
from .join import ConstructionFailure, JoinGraph, JoinTrace, build_join_graph, lift_and_join
from .lift import LiftFamily, discrete_derivative, lempel_lift, lift_params, lifted_strings
from .necklace import (
    AlphabetError,
    AnchorNotFound,
    InvalidExtension,
    Necklace,
    add_mod,
    canonical_rotation,
    count_occurrences,
    extend_longest_run,
    find_occurrences,
    join,
    maximal_runs,
    occurrence_profile,
)
from .verify import Classification, LoadBalance, Tier, Verdict, classify, is_pkl, load_balance

__version__ = "0.1.0"

"""Constructive witnesses for the mediation of dilated simplices."""

from src.dilation.greedy import greedy_bounded_sum
from src.dilation.verification import verify_dilation_theorem
from src.dilation.witness import (
    bead_average_witness,
    default_depth_budget,
    mediation_witness,
    minimum_dilation,
    validate_witness,
    witness_full,
    witness_large_k,
)

__all__ = [
    "bead_average_witness",
    "default_depth_budget",
    "greedy_bounded_sum",
    "mediation_witness",
    "minimum_dilation",
    "validate_witness",
    "verify_dilation_theorem",
    "witness_full",
    "witness_large_k",
]

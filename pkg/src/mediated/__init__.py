"""Mediated sets and the SOS decision for agiforms."""

from src.mediated.mediation import (
    find_midpoint_pair,
    is_mediated,
    maximal_mediated_set,
    mediation_certificate,
    sos_membership,
)

__all__ = [
    "find_midpoint_pair",
    "is_mediated",
    "maximal_mediated_set",
    "mediation_certificate",
    "sos_membership",
]

"""Agiforms, their SOS decision and binomial-square decompositions, and the Horn form."""

from src.agiform.decomposition import (
    blowup_decompose,
    decompose,
    hurwitz_explicit_decomposition,
    is_sos,
)
from src.agiform.forms import (
    CENTROID,
    HURWITZ_VERTICES,
    MOTZKIN_VERTICES,
    agiform_from_polynomial,
    circuit_simplex,
    horn_alternate,
    horn_form,
    horn_restriction_identity,
    hurwitz_family,
    hurwitz_h,
    make_agiform,
    motzkin,
    newton_lattice_points,
)
from src.agiform.sampling import horn_psd_sample

__all__ = [
    "CENTROID",
    "HURWITZ_VERTICES",
    "MOTZKIN_VERTICES",
    "agiform_from_polynomial",
    "blowup_decompose",
    "circuit_simplex",
    "decompose",
    "horn_alternate",
    "horn_form",
    "horn_psd_sample",
    "horn_restriction_identity",
    "hurwitz_explicit_decomposition",
    "hurwitz_family",
    "hurwitz_h",
    "is_sos",
    "make_agiform",
    "motzkin",
    "newton_lattice_points",
]

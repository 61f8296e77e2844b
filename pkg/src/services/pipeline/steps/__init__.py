"""Pipeline step implementations, one per CLI stage."""

from .decompose_step import DecomposeStep
from .demo_step import DemoStep
from .enumerate_step import EnumerateStep
from .is_sos_step import IsSosStep
from .load_document_step import LoadDocumentStep
from .mediated_step import MediatedStep
from .verify_theorem_step import VerifyTheoremStep
from .witness_step import WitnessStep

__all__ = [
    "DecomposeStep",
    "DemoStep",
    "EnumerateStep",
    "IsSosStep",
    "LoadDocumentStep",
    "MediatedStep",
    "VerifyTheoremStep",
    "WitnessStep",
]

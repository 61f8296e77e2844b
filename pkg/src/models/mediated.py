"""Pydantic models for mediated sets and their certificates."""

from pydantic import BaseModel, ConfigDict, Field

from src.models.lattice import LatticePoint

MidpointPair = tuple[LatticePoint, LatticePoint]


class MediationCertificate(BaseModel):
    """Each non-vertex point y of a set S mapped to distinct even (z1, z2) in S.

    Every entry satisfies y = (z1 + z2) / 2.
    """

    entries: dict[LatticePoint, MidpointPair] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)

    def __len__(self) -> int:
        return len(self.entries)

    def points(self) -> list[LatticePoint]:
        return sorted(self.entries)

    def is_valid_for(self, members: frozenset[LatticePoint] | set[LatticePoint]) -> bool:
        """Re-check every entry arithmetically against ``members``."""
        for y, (z1, z2) in self.entries.items():
            if z1 == z2 or z1 not in members or z2 not in members:
                return False
            if any(c % 2 for c in z1 + z2):
                return False
            if any(a + b != 2 * c for a, b, c in zip(z1, z2, y)):
                return False
        return True


class MediationResult(BaseModel):
    """Outcome of a mediatedness check: a certificate, or the unrepresented points."""

    mediated: bool
    certificate: MediationCertificate = Field(default_factory=MediationCertificate)
    unrepresented: tuple[LatticePoint, ...] = ()

    model_config = ConfigDict(frozen=True)


class SosMembership(BaseModel):
    """SOS verdict for an apex w: membership in the maximal mediated set."""

    apex: LatticePoint
    is_sos: bool
    # Midpoint representations reachable from the apex (a mediated subset containing it)
    chain: MediationCertificate = Field(default_factory=MediationCertificate)
    maximal_set: frozenset[LatticePoint] = frozenset()

    model_config = ConfigDict(frozen=True)

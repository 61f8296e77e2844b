"""Pydantic models for the dilation witness engine."""

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from src.models.lattice import LatticePoint


class WitnessPath(str, Enum):
    """Which construction produced a witness pair."""

    BEAD_AVERAGE = "BeadAverage"
    GREEDY_BEAD = "GreedyBead"
    SPECIAL_INTERIOR_POINT = "SpecialInteriorPoint"
    SUBDIVISION = "Subdivision"


class WitnessPair(BaseModel):
    """Two distinct even points of kU whose average is ``target``."""

    target: LatticePoint
    z1: LatticePoint
    z2: LatticePoint
    path: WitnessPath
    # Number of subdivisions performed (0 unless path is SUBDIVISION)
    depth: int = 0
    # Construction that closed the recursion when path is SUBDIVISION
    resolved_by: WitnessPath | None = None

    model_config = ConfigDict(frozen=True)

    def path_label(self) -> str:
        """Render the path as ``Subdivision(depth)`` or the bare path name."""
        if self.path is WitnessPath.SUBDIVISION:
            return f"{self.path.value}({self.depth})"
        return self.path.value


class ScaledBarycentric(BaseModel):
    """w = sum(beta_i u_i) with sum(beta_i) = k, plus floor / fractional parts of 2*beta."""

    beta: tuple[Fraction, ...]
    floors: tuple[int, ...] = Field(description="floor(2*beta_i)")
    fracs: tuple[Fraction, ...] = Field(description="{2*beta_i}, in [0, 1)")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def floor_sum(self) -> int:
        return sum(self.floors)

    def is_integral(self) -> bool:
        """True when every beta_i is an integer, i.e. the point is a bead."""
        return all(b.denominator == 1 for b in self.beta)


class WitnessFailure(BaseModel):
    """A lattice point for which no witness could be produced."""

    point: LatticePoint
    error_type: str
    message: str

    model_config = ConfigDict(frozen=True)


class DilationReport(BaseModel):
    """Outcome of checking that every non-vertex point of kU is witnessed."""

    k: int
    n: int
    lattice_point_count: int
    non_vertex_count: int
    witnessed_count: int
    path_counts: dict[str, int]
    max_subdivision_depth: int = 0
    witnesses: list[WitnessPair] = Field(default_factory=list)
    failures: list[WitnessFailure] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.witnessed_count == self.non_vertex_count

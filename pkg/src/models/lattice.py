"""Pydantic models for lattice points, simplices and barycentric coordinates."""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

# An exponent vector: fixed-length tuple of integers
LatticePoint = tuple[int, ...]


class Simplex(BaseModel):
    """A simplex U = cvx{u_1, ..., u_n} of even lattice points on the hyperplane sum = 2d.

    Build instances through ``validate_simplex``; the constructor itself does
    not check the invariants.
    """

    vertices: tuple[LatticePoint, ...] = Field(description="u_1, ..., u_n in input order")
    degree_sum: int = Field(description="Common coordinate sum 2d of every vertex")

    model_config = ConfigDict(frozen=True)

    @property
    def n(self) -> int:
        """Number of vertices, equal to the ambient dimension."""
        return len(self.vertices)

    @property
    def degree(self) -> int:
        """Half the coordinate sum (the form degree is 2d)."""
        return self.degree_sum // 2

    def dilate(self, k: int) -> "Simplex":
        """Return kU, the simplex with vertices k*u_i."""
        return Simplex(
            vertices=tuple(tuple(k * c for c in u) for u in self.vertices),
            degree_sum=k * self.degree_sum,
        )

    def replace_vertex(self, index: int, point: LatticePoint) -> tuple[LatticePoint, ...]:
        """Vertex sequence with ``vertices[index]`` replaced by ``point``."""
        return self.vertices[:index] + (point,) + self.vertices[index + 1 :]


class BarycentricCoords(BaseModel):
    """Barycentric weights lambda_1..lambda_n of a point, summing to exactly 1."""

    weights: tuple[Fraction, ...]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def is_nonnegative(self) -> bool:
        return all(w >= 0 for w in self.weights)

    def is_positive(self) -> bool:
        return all(w > 0 for w in self.weights)

    def scaled(self, k: int) -> tuple[Fraction, ...]:
        return tuple(k * w for w in self.weights)

"""Pydantic models for agiforms and binomial-square decompositions."""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from src.models.lattice import BarycentricCoords, LatticePoint, Simplex
from src.poly import SparsePolynomial, sum_polynomials


class Agiform(BaseModel):
    """scale * (lambda_1 x^u_1 + ... + lambda_n x^u_n - x^w) for w in U ∩ Z^n."""

    simplex: Simplex
    apex: LatticePoint = Field(description="w")
    weights: BarycentricCoords = Field(description="lambda_i of w, all >= 0")
    scale: Fraction = Fraction(1)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def n(self) -> int:
        return self.simplex.n

    def to_polynomial(self) -> SparsePolynomial:
        terms: dict[LatticePoint, Fraction] = {}
        for weight, vertex in zip(self.weights.weights, self.simplex.vertices):
            terms[vertex] = terms.get(vertex, Fraction(0)) + self.scale * weight
        terms[self.apex] = terms.get(self.apex, Fraction(0)) - self.scale
        return SparsePolynomial(terms, self.n)

    def scaled(self, factor: Fraction | int) -> "Agiform":
        return self.model_copy(update={"scale": self.scale * Fraction(factor)})


class SquareTerm(BaseModel):
    """coefficient * (x^plus - x^minus)^2."""

    coefficient: Fraction
    plus: LatticePoint
    minus: LatticePoint

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def expand(self) -> SparsePolynomial:
        binomial = SparsePolynomial({self.plus: 1, self.minus: -1}, len(self.plus))
        return self.coefficient * binomial**2


class BinomialSquareDecomposition(BaseModel):
    """sum_j c_j (y^plus_j - y^minus_j)^2 with y_i = x_i^(1/root_degree)."""

    arity: int
    terms: tuple[SquareTerm, ...] = ()
    # Exponents are in the formal variables y_i = x_i^(1/root_degree)
    root_degree: int = 1

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def __len__(self) -> int:
        return len(self.terms)

    def expand(self) -> SparsePolynomial:
        """The sum of squares as a polynomial in the y variables."""
        return sum_polynomials((t.expand() for t in self.terms), self.arity)

    def to_source_polynomial(self) -> SparsePolynomial:
        """Substitute y_i^k -> x_i back (exponents divided by the root degree)."""
        return self.expand().contract_power(self.root_degree)

    def verify(self, target: SparsePolynomial) -> bool:
        """Exact check that the squares reproduce ``target`` (a polynomial in x)."""
        return self.to_source_polynomial() == target

"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a map from exponent vectors to nonzero ``Fraction``
coefficients. Instances are immutable and canonical: equal polynomials have
equal term maps, so equality and hashing are structural.
"""

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from src.errors import ArityMismatch, DivisibilityError, DocumentError
from src.utils.rational import format_fraction, to_fraction

Exponent = tuple[int, ...]

# Exponents are machine-width; coefficients are unbounded
MAX_EXPONENT = 2**31 - 1

_SHORT_NAMES = ("x", "y", "z")


def default_variables(arity: int) -> tuple[str, ...]:
    """x, y, z for up to three variables, otherwise x1..xn."""
    if arity <= len(_SHORT_NAMES):
        return _SHORT_NAMES[:arity]
    return tuple(f"x{i + 1}" for i in range(arity))


def _check_exponent(exponent: Exponent) -> Exponent:
    for e in exponent:
        if e < 0:
            raise ValueError(f"Negative exponent in {exponent}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"Exponent {e} exceeds {MAX_EXPONENT}")
    return exponent


def graded_lex_key(exponent: Exponent) -> tuple:
    """Sort key placing higher total degree first, then lexicographically larger first."""
    return (-sum(exponent), tuple(-e for e in exponent))


class SparsePolynomial:
    """Polynomial in ``arity`` variables over Q."""

    __slots__ = ("_terms", "_arity", "_hash")

    def __init__(
        self,
        terms: Mapping[Sequence[int], int | Fraction] | None = None,
        arity: int | None = None,
    ):
        """Build a polynomial, dropping zero coefficients and merging duplicates.

        Args:
            terms: Map from exponent vectors to coefficients
            arity: Number of variables (inferred from the terms when omitted)

        Raises:
            ArityMismatch: If exponent vectors have different lengths
        """
        collected: dict[Exponent, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            key = _check_exponent(tuple(int(e) for e in exponent))
            if arity is None:
                arity = len(key)
            elif len(key) != arity:
                raise ArityMismatch(f"Exponent {key} does not have arity {arity}")
            collected[key] = collected.get(key, Fraction(0)) + Fraction(coeff)
        if arity is None:
            raise ArityMismatch("Arity is required for the zero polynomial")
        self._arity = arity
        self._terms = MappingProxyType({e: c for e, c in collected.items() if c != 0})
        self._hash: int | None = None

    # Constructors

    @classmethod
    def zero(cls, arity: int) -> "SparsePolynomial":
        return cls({}, arity)

    @classmethod
    def constant(cls, value: int | Fraction, arity: int) -> "SparsePolynomial":
        return cls({(0,) * arity: value}, arity)

    @classmethod
    def monomial(
        cls, exponent: Sequence[int], coeff: int | Fraction = 1
    ) -> "SparsePolynomial":
        return cls({tuple(exponent): coeff}, len(exponent))

    @classmethod
    def variable(cls, index: int, arity: int) -> "SparsePolynomial":
        """The variable x_{index+1} in ``arity`` variables."""
        exponent = [0] * arity
        exponent[index] = 1
        return cls.monomial(exponent)

    # Accessors

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def support(self) -> frozenset[Exponent]:
        """supp(p): exponents with nonzero coefficient."""
        return frozenset(self._terms)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical graded-lex order."""
        return sorted(self._terms.items(), key=lambda item: graded_lex_key(item[0]))

    def degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    # Ring operations

    def _check_arity(self, other: "SparsePolynomial") -> None:
        if self._arity != other._arity:
            raise ArityMismatch(f"Arity {self._arity} does not match arity {other._arity}")

    def _coerce(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            self._check_arity(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePolynomial.constant(other, self._arity)
        return NotImplemented

    def __add__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return SparsePolynomial(merged, self._arity)

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({e: -c for e, c in self._terms.items()}, self._arity)

    def __sub__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "SparsePolynomial":
        return (-self) + other

    def __mul__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                product[e] = product.get(e, Fraction(0)) + c1 * c2
        return SparsePolynomial(product, self._arity)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Power must be a non-negative integer, got {exponent!r}")
        result = SparsePolynomial.constant(1, self._arity)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(other, self._arity)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._arity == other._arity and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._arity, frozenset(self._terms.items())))
        return self._hash

    # Evaluation and substitutions

    def evaluate(self, point: Sequence[int | Fraction]) -> Fraction:
        """Exact value at a rational point.

        Raises:
            ArityMismatch: If the point has the wrong length
        """
        if len(point) != self._arity:
            raise ArityMismatch(f"Point of length {len(point)} for arity {self._arity}")
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for exponent, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, exponent):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute_power(self, k: int) -> "SparsePolynomial":
        """p(x_1^k, ..., x_n^k): every exponent vector multiplied by k."""
        if k < 1:
            raise ValueError(f"Power must be positive, got {k}")
        return SparsePolynomial(
            {tuple(k * e for e in exponent): c for exponent, c in self._terms.items()},
            self._arity,
        )

    def contract_power(self, k: int) -> "SparsePolynomial":
        """Inverse of ``substitute_power``: divide every exponent by k.

        Raises:
            DivisibilityError: If some exponent is not a multiple of k
        """
        if k < 1:
            raise ValueError(f"Power must be positive, got {k}")
        contracted = {}
        for exponent, c in self._terms.items():
            if any(e % k for e in exponent):
                raise DivisibilityError(f"Exponent {exponent} is not divisible by {k}")
            contracted[tuple(e // k for e in exponent)] = c
        return SparsePolynomial(contracted, self._arity)

    def cyclic_shift(self) -> "SparsePolynomial":
        """Rotate variable indices by one: x_i -> x_{i+1 mod n}."""
        return SparsePolynomial(
            {exponent[-1:] + exponent[:-1]: c for exponent, c in self._terms.items()},
            self._arity,
        )

    def restrict(self, assignments: Mapping[int, int | Fraction]) -> "SparsePolynomial":
        """Set the variables at the given indices to exact values (arity is kept)."""
        restricted: dict[Exponent, Fraction] = {}
        for exponent, c in self._terms.items():
            coeff = c
            reduced = list(exponent)
            for index, value in assignments.items():
                if reduced[index]:
                    coeff *= Fraction(value) ** reduced[index]
                    reduced[index] = 0
            key = tuple(reduced)
            restricted[key] = restricted.get(key, Fraction(0)) + coeff
        return SparsePolynomial(restricted, self._arity)

    # Serialization

    def to_string(self, variables: Sequence[str] | None = None) -> str:
        """Human-readable form in canonical order, e.g. ``3/2*x^2*y - y*z^2``."""
        if not self._terms:
            return "0"
        names = tuple(variables) if variables else default_variables(self._arity)
        pieces = []
        for index, (exponent, coeff) in enumerate(self.sorted_terms()):
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exponent) if e
            ]
            magnitude = abs(coeff)
            if not factors:
                body = format_fraction(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_fraction(magnitude)] + factors)
            if index == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.to_string()!r}, arity={self._arity})"

    def to_dict(self) -> dict[str, str]:
        """JSON-ready map ``"a,b,c" -> "p/q"`` in canonical order."""
        return {
            ",".join(str(e) for e in exponent): format_fraction(coeff)
            for exponent, coeff in self.sorted_terms()
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, str | int], arity: int) -> "SparsePolynomial":
        """Inverse of ``to_dict``.

        Raises:
            DocumentError: If a key or coefficient cannot be parsed
        """
        terms = {}
        for key, value in data.items():
            try:
                exponent = tuple(int(part) for part in key.split(",")) if key else ()
            except ValueError as e:
                raise DocumentError(f"Bad exponent key {key!r}") from e
            terms[exponent] = to_fraction(value)
        return cls(terms, arity)


def sum_polynomials(polys: Iterable[SparsePolynomial], arity: int) -> SparsePolynomial:
    """Sum of polynomials without building intermediate canonical forms."""
    merged: dict[Exponent, Fraction] = {}
    for p in polys:
        if p.arity != arity:
            raise ArityMismatch(f"Arity {p.arity} does not match arity {arity}")
        for e, c in p.terms.items():
            merged[e] = merged.get(e, Fraction(0)) + c
    return SparsePolynomial(merged, arity)

"""Exact sparse polynomial arithmetic."""

from src.poly.polynomial import (
    SparsePolynomial,
    default_variables,
    graded_lex_key,
    sum_polynomials,
)

__all__ = ["SparsePolynomial", "default_variables", "graded_lex_key", "sum_polynomials"]

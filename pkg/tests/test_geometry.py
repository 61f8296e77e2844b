"""Unit tests for simplex validation, barycentric coordinates and enumeration."""

import random
from fractions import Fraction

import pytest

from src.errors import (
    AffinelyDependent,
    BudgetExceeded,
    DimensionMismatch,
    DuplicateVertex,
    NegativeVertex,
    NotInAffineHull,
    OddVertex,
    PointOutsideSimplex,
    RaggedInput,
    TooFewVertices,
    UnequalDegreeSums,
)
from src.geometry import (
    barycentric_coordinates,
    bead_coefficients,
    beads,
    combine,
    compositions,
    contains,
    enumerate_lattice_points,
    even_points,
    is_interior,
    is_vertex,
    scaled_barycentric,
    validate_simplex,
)
from tests import oracles
from tests.conftest import random_simplex


class TestValidateSimplex:
    """Tests for validate_simplex."""

    def test_motzkin_simplex(self, u1):
        assert u1.n == 3
        assert u1.degree_sum == 6
        assert u1.degree == 3
        assert u1.vertices == ((4, 2, 0), (2, 4, 0), (0, 0, 6))

    @pytest.mark.parametrize(
        "vertices, error",
        [
            ([[2]], TooFewVertices),
            ([], TooFewVertices),
            ([[4, 2, 0], [2, 4], [0, 0, 6]], RaggedInput),
            ([[2, 0, 0], [0, 2, 0]], DimensionMismatch),
            ([[-2, 4], [2, 0]], NegativeVertex),
            ([[3, 1, 0], [2, 2, 0], [0, 0, 4]], OddVertex),
            ([[2, 0], [2, 0]], DuplicateVertex),
            ([[2, 0], [0, 4]], UnequalDegreeSums),
            ([[4, 0, 2], [0, 4, 2], [2, 2, 2]], AffinelyDependent),
        ],
    )
    def test_rejects_invalid_vertices(self, vertices, error):
        with pytest.raises(error):
            validate_simplex(vertices)

    def test_validation_errors_map_to_exit_code_2(self):
        with pytest.raises(OddVertex) as excinfo:
            validate_simplex([[1, 1], [0, 2]])
        assert excinfo.value.exit_code == 2

    def test_dilate(self, u1):
        dilated = u1.dilate(2)
        assert dilated.vertices == ((8, 4, 0), (4, 8, 0), (0, 0, 12))
        assert dilated.degree_sum == 12


class TestBarycentricCoordinates:
    """Tests for exact barycentric coordinates and membership."""

    def test_point_of_motzkin_simplex(self, u1):
        coords = barycentric_coordinates(u1, (3, 2, 1))
        assert coords.weights == (Fraction(2, 3), Fraction(1, 6), Fraction(1, 6))
        assert sum(coords.weights) == 1

    def test_centroid(self, u1):
        coords = barycentric_coordinates(u1, (2, 2, 2))
        assert coords.weights == (Fraction(1, 3),) * 3
        assert coords.is_positive()

    def test_negative_weights_are_returned(self, u1):
        coords = barycentric_coordinates(u1, (6, 0, 0))
        assert not coords.is_nonnegative()

    def test_off_hyperplane(self, u1):
        with pytest.raises(NotInAffineHull):
            barycentric_coordinates(u1, (1, 1, 1))

    def test_wrong_length(self, u1):
        with pytest.raises(RaggedInput):
            barycentric_coordinates(u1, (2, 2, 2, 0))

    def test_contains(self, u1):
        assert contains(u1, 1, (3, 3, 0))
        assert not contains(u1, 1, (6, 0, 0))
        assert not contains(u1, 1, (1, 1, 1))
        assert contains(u1, 2, (4, 4, 4))
        assert not contains(u1, 2, (2, 2, 2))

    def test_interior_and_vertex(self, u1):
        assert is_interior(u1, 1, (2, 2, 2))
        assert not is_interior(u1, 1, (3, 3, 0))
        assert is_vertex(u1, 1, (0, 0, 6))
        assert is_vertex(u1, 2, (0, 0, 12))
        assert not is_vertex(u1, 2, (0, 0, 6))

    def test_scaled_barycentric(self, u1):
        sb = scaled_barycentric(u1, 2, (4, 4, 4))
        assert sb.beta == (Fraction(2, 3),) * 3
        assert sb.floors == (1, 1, 1)
        assert sb.fracs == (Fraction(1, 3),) * 3
        assert sb.floor_sum == 3
        assert not sb.is_integral()

    def test_scaled_barycentric_outside(self, u1):
        with pytest.raises(PointOutsideSimplex):
            scaled_barycentric(u1, 1, (6, 0, 0))

    def test_bead_coefficients(self, u1):
        assert bead_coefficients(u1, 2, (6, 6, 0)) == (1, 1, 0)
        assert bead_coefficients(u1, 2, (4, 4, 4)) is None
        assert bead_coefficients(u1, 2, (12, 0, 0)) is None

    def test_combine(self, u1):
        assert combine(u1, (1, 1, 0)) == (6, 6, 0)
        assert combine(u1, (Fraction(1, 2), Fraction(1, 2), 0)) == (3, 3, 0)
        with pytest.raises(ValueError):
            combine(u1, (Fraction(1, 4), 0, 0))


class TestEnumeration:
    """Tests for lattice point enumeration."""

    def test_motzkin_simplex_has_ten_points(self, u1):
        points = enumerate_lattice_points(u1, 1)
        assert len(points) == 10
        assert (2, 2, 2) in points
        assert even_points(points) == {(4, 2, 0), (2, 4, 0), (0, 0, 6), (2, 2, 2)}

    def test_hurwitz_simplex_has_28_points(self, u2):
        assert len(enumerate_lattice_points(u2, 1)) == 28
        assert len(enumerate_lattice_points(u2, 2)) == 91

    def test_budget(self, u2):
        with pytest.raises(BudgetExceeded) as excinfo:
            enumerate_lattice_points(u2, 1, max_box_points=5)
        assert excinfo.value.exit_code == 3
        assert excinfo.value.limit == 5

    def test_nonpositive_dilation(self, u1):
        with pytest.raises(ValueError):
            enumerate_lattice_points(u1, 0)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_matches_box_scan_oracle(self, u1, k):
        assert enumerate_lattice_points(u1, k) == oracles.lattice_points(u1, k)

    def test_random_simplices_match_oracle(self):
        rng = random.Random(7)
        for _ in range(20):
            s = random_simplex(rng, rng.randint(2, 4), max_half_sum=3)
            k = rng.randint(1, 2)
            assert enumerate_lattice_points(s, k) == oracles.lattice_points(s, k)

    def test_compositions(self):
        assert sorted(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
        assert len(list(compositions(3, 4))) == 20

    def test_beads_are_even_lattice_points(self, u1):
        bead_set = beads(u1, 2)
        assert len(bead_set) == 6
        points = enumerate_lattice_points(u1, 2)
        assert bead_set <= even_points(points)

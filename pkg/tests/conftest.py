import json
import random
from pathlib import Path

import pytest

from src.errors import ValidationError
from src.geometry import validate_simplex

FIXTURES_DIR = Path(__file__).parent / "fixtures"

U1_VERTICES = ((4, 2, 0), (2, 4, 0), (0, 0, 6))
U2_VERTICES = ((6, 0, 0), (0, 6, 0), (0, 0, 6))


def load_fixture(name: str) -> dict:
    with open(FIXTURES_DIR / name) as f:
        return json.load(f)


def random_simplex(rng: random.Random, n: int, max_entry: int = 10, max_half_sum: int = 5):
    """A random valid simplex in dimension n with even entries <= max_entry."""
    for _ in range(1000):
        d = rng.randint(1, max_half_sum)
        vertices = []
        for _ in range(n):
            halves = [0] * n
            for _ in range(d):
                halves[rng.randrange(n)] += 1
            vertices.append(tuple(2 * h for h in halves))
        if any(c > max_entry for v in vertices for c in v):
            continue
        try:
            return validate_simplex(vertices)
        except ValidationError:
            continue
    raise RuntimeError(f"No random simplex found for n={n}")


@pytest.fixture
def u1():
    """Newton simplex of the Motzkin form."""
    return validate_simplex(U1_VERTICES)


@pytest.fixture
def u2():
    """Newton simplex of the Hurwitz form H."""
    return validate_simplex(U2_VERTICES)


@pytest.fixture
def standard_4():
    """cvx{2 e_1, ..., 2 e_4}."""
    return validate_simplex(load_fixture("standard_4.json")["vertices"])


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def special_interior_4():
    """n = 4 simplex whose 2U holds a point equal to 2 times its interior point."""
    return validate_simplex(load_fixture("special_interior_4.json")["vertices"])


@pytest.fixture
def subdivision_4():
    """n = 4 simplex whose 2U needs subdivision for some points."""
    return validate_simplex(load_fixture("subdivision_4.json")["vertices"])

"""Shared fixtures: the recurring example fans.

mixed_fan is the five-ray running example used across the tests; its
cones have multiplicities 4, 5, 2, 1, 2 and its matrices are known in
closed form. The classical fans (projective plane, product of lines,
a weighted plane, and a four-ray fan with a half-integer cup entry)
cover the small regression cases.
"""

import pytest

from toricsurf import normalize, random_complete_fan, validate_fan

MIXED_RAYS = ((-2, 1), (-2, -1), (1, -2), (1, 0), (0, 1))
P2_RAYS = ((-1, -1), (1, 0), (0, 1))
P1XP1_RAYS = ((-1, 0), (0, -1), (1, 0), (0, 1))
W112_RAYS = ((-1, -2), (1, 0), (0, 1))
HALFINT_RAYS = ((-1, 0), (0, -1), (1, 0), (1, 2))


@pytest.fixture
def mixed_fan():
    return validate_fan(MIXED_RAYS)


@pytest.fixture
def p2_fan():
    return validate_fan(P2_RAYS)


@pytest.fixture
def p1xp1_fan():
    return validate_fan(P1XP1_RAYS)


@pytest.fixture
def w112_fan():
    return validate_fan(W112_RAYS)


@pytest.fixture
def halfint_fan():
    return validate_fan(HALFINT_RAYS)


def classical_fans():
    return [validate_fan(rays) for rays in
            (MIXED_RAYS, P2_RAYS, P1XP1_RAYS, W112_RAYS, HALFINT_RAYS)]


def sample_fans(count: int = 40, seed: int = 2024):
    """Classical fans plus a deterministic batch of random normalized fans."""
    fans = classical_fans()
    for index in range(count):
        ray_count = 3 + index % 10
        fans.append(random_complete_fan(ray_count, 12, seed + index))
    return fans


def renormalized(fan):
    """Fan moved to normal form with the default pivot."""
    return normalize(fan)[0]

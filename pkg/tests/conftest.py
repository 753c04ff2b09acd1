from __future__ import annotations

import pytest

from terrainguard import GenSpec, Terrain, random_terrain, validate

SQUARE_VALLEY = [(0, 10), (0, 0), (10, 0), (10, 10)]
SINGLE_STEP_UP = [(0, 0), (0, 10)]
# one high ledge whose far corner is hidden behind the middle rim
BLOCKED_LEDGE = [(0, 10), (0, 6), (10, 6), (10, 0), (20, 0), (20, 10)]


@pytest.fixture
def square_valley() -> Terrain:
    return validate(SQUARE_VALLEY)


@pytest.fixture
def single_step_up() -> Terrain:
    return validate(SINGLE_STEP_UP)


@pytest.fixture
def blocked_ledge() -> Terrain:
    return validate(BLOCKED_LEDGE)


def small_corpus(count: int = 120, max_steps: int = 8, seed0: int = 1000) -> list[Terrain]:
    """Small seeded terrains for exhaustive pairwise checks."""

    out = []
    for k in range(count):
        steps = 1 + (k % max_steps)
        out.append(random_terrain(GenSpec(seed=seed0 + k, steps=steps, max_run=6, max_rise=6)))
    return out


@pytest.fixture(scope="session")
def corpus() -> list[Terrain]:
    return small_corpus()


@pytest.fixture(scope="session")
def medium_corpus() -> list[Terrain]:
    return [
        random_terrain(GenSpec(seed=7000 + k, steps=2 + (k % 11), max_run=8, max_rise=8))
        for k in range(150)
    ]

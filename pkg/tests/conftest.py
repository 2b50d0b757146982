import numpy as np
import pytest

from confplan.config_space import Configuration


def make_configuration(
    rng: np.random.Generator, dim: int, k: int, levels: int | None = None
) -> Configuration:
    """
    Random configuration whose points share integer heights, so several
    points usually sit on one level. `levels` pins the level count.
    """
    if levels is None:
        levels = int(rng.integers(1, k + 1))
    heights = rng.choice(np.arange(-6, 7), size=levels, replace=False).astype(float)
    assignment = np.concatenate(
        [np.arange(levels), rng.integers(0, levels, size=k - levels)]
    )
    rng.shuffle(assignment)
    points = np.empty((k, dim))
    points[:, 0] = rng.uniform(-5.0, 5.0, size=k)
    points[:, 1:-1] = rng.uniform(-1.0, 1.0, size=(k, dim - 2))
    points[:, -1] = heights[assignment]
    return Configuration(dim, points)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def random_configuration(rng):
    def factory(dim: int, k: int, levels: int | None = None) -> Configuration:
        return make_configuration(rng, dim, k, levels)

    return factory


@pytest.fixture
def stratum_direction(rng):
    """
    Perturbation direction that keeps a configuration in its stratum for
    small steps: first coordinates move freely, each level's height moves
    as one, transverse coordinates stay.
    """

    def factory(x: Configuration) -> np.ndarray:
        direction = np.zeros_like(x.points)
        direction[:, 0] = rng.uniform(-1.0, 1.0, size=x.k)
        levels = {h: rng.uniform(-1.0, 1.0) for h in np.unique(x.heights).tolist()}
        direction[:, -1] = [levels[h] for h in x.heights.tolist()]
        return direction

    return factory

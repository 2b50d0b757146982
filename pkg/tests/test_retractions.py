import numpy as np
import pytest

from confplan.config_space import Configuration
from confplan.errors import ArgumentError, InvariantError
from confplan.retractions import (
    GroupSpec,
    SpaceSpec,
    UnitTuple,
    config_to_sphere,
    membership,
    normalize,
    partial_sums,
    sphere_to_config,
)


def _random_unit_tuple(rng, dim, count):
    return UnitTuple.from_vectors(rng.normal(size=(count, dim)))


def _pair(first, second):
    return Configuration.from_points([first, second])


def test_normalize_examples(rng):
    assert np.allclose(normalize((3.0, 4.0)), (0.6, 0.8))
    e1 = np.array([1.0, 0.0])
    assert np.array_equal(normalize(e1), e1)
    for _ in range(100):
        assert abs(np.linalg.norm(normalize(rng.normal(size=4))) - 1.0) <= 1e-15


def test_normalize_rejects_zero_vector():
    with pytest.raises(ArgumentError):
        normalize((0.0, 0.0))


def test_unit_tuple_rejects_non_unit_vectors():
    with pytest.raises(ArgumentError):
        UnitTuple([[1.0, 1.0]])


def test_plain_retraction_prepends_origin():
    image = sphere_to_config(UnitTuple([[1.0, 0.0]]), punctured=False)
    assert image.as_lists() == [[0.0, 0.0], [1.0, 0.0]]


def test_punctured_retraction_of_aligned_vectors():
    u = UnitTuple([[1.0, 0.0], [1.0, 0.0], [1.0, 0.0]])
    image = sphere_to_config(u, punctured=True)
    assert np.linalg.norm(image.points, axis=1).tolist() == [1.0, 4.0, 13.0]
    assert np.array_equal(partial_sums(u), image.points)


def test_plain_inverse_of_unit_difference():
    u = config_to_sphere(_pair((0.0, 0.0), (1.0, 0.0)), punctured=False)
    assert u.vectors.tolist() == [[1.0, 0.0]]


def test_punctured_inverse_requires_nonzero_first_point():
    x = Configuration.from_points([(0.0, 0.0), (1.0, 0.0)])
    with pytest.raises(ArgumentError):
        config_to_sphere(x, punctured=True)


def test_plain_inverse_needs_two_points():
    with pytest.raises(ArgumentError):
        config_to_sphere(Configuration.from_points([(1.0, 0.0)]), punctured=False)


def test_zero_difference_is_an_invariant_error():
    # bypass Configuration validation to reach the internal guard
    x = Configuration.from_points([(1.0, 0.0), (2.0, 0.0)])
    duplicated = np.array([[1.0, 0.0], [1.0, 0.0]])
    object.__setattr__(x, "points", duplicated)
    with pytest.raises(InvariantError):
        config_to_sphere(x, punctured=False)


@pytest.mark.parametrize("dim", [2, 3, 4])
@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_retractions_round_trip_and_separate_orbits(dim, k, rng):
    orbit_space = SpaceSpec(dim=dim, group=GroupSpec.ORTHOGONAL, puncture_origin=True)
    for _ in range(1000):
        plain = _random_unit_tuple(rng, dim, k - 1)
        image = sphere_to_config(plain, punctured=False)
        assert image.k == k
        back = config_to_sphere(image, punctured=False)
        assert np.abs(back.vectors - plain.vectors).max() <= 1e-12

        u = _random_unit_tuple(rng, dim, k)
        image = sphere_to_config(u, punctured=True)
        back = config_to_sphere(image, punctured=True)
        assert np.abs(back.vectors - u.vectors).max() <= 1e-12

        norms = np.linalg.norm(image.points, axis=1)
        for level in range(1, k + 1):
            assert norms[level - 1] <= (3**level - 1) / 2 + 1e-9
            if level < k:
                assert norms[level] >= (3**level + 1) / 2 - 1e-9
        assert np.all(np.diff(norms) > 0)
        assert membership(image, orbit_space)


def test_punctured_images_avoid_obstacles_inside_unit_ball(rng):
    for dim in (2, 3, 4):
        directions = rng.normal(size=(10, dim))
        radii = rng.uniform(0.0, 0.99, size=(10, 1))
        unit = directions / np.linalg.norm(directions, axis=1, keepdims=True)
        obstacles = unit * radii
        space = SpaceSpec(
            dim=dim,
            group=GroupSpec.ORTHOGONAL,
            puncture_origin=True,
            obstacles=tuple(map(tuple, obstacles)),
        )
        for k in range(2, 7):
            for _ in range(50):
                u = _random_unit_tuple(rng, dim, k)
                image = sphere_to_config(u, punctured=True)
                assert membership(image, space)


@pytest.mark.parametrize("group", list(GroupSpec))
def test_plain_images_have_distinct_orbits_for_supported_groups(group, rng):
    # the origin is the only point of its orbit, the rest have increasing norms
    space = SpaceSpec(dim=3, group=group)
    for k in range(2, 7):
        image = sphere_to_config(_random_unit_tuple(rng, 3, k - 1), punctured=False)
        assert membership(image, space)


def test_membership_predicates():
    antipodal = SpaceSpec(dim=2, group=GroupSpec.ANTIPODAL, puncture_origin=True)
    orthogonal = SpaceSpec(dim=2, group=GroupSpec.ORTHOGONAL, puncture_origin=True)
    trivial = SpaceSpec(dim=2)

    assert not membership(_pair((1.0, 0.0), (-1.0, 0.0)), antipodal)
    assert membership(_pair((1.0, 0.0), (-1.0, 0.0)), trivial)
    assert membership(_pair((1.0, 0.0), (0.0, 2.0)), orthogonal)
    assert not membership(_pair((1.0, 0.0), (0.0, 1.0)), orthogonal)
    assert not membership(_pair((0.0, 0.0), (0.0, 1.0)), orthogonal)


def test_membership_with_obstacles():
    space = SpaceSpec(dim=2, obstacles=((0.0, 1.0),))
    assert not membership(Configuration.from_points([(0.0, 1.0), (2.0, 2.0)]), space)
    assert membership(Configuration.from_points([(0.0, 2.0), (2.0, 2.0)]), space)


def test_membership_rejects_dimension_mismatch():
    with pytest.raises(ArgumentError):
        membership(Configuration.from_points([(0.0, 0.0, 1.0)]), SpaceSpec(dim=2))


def test_space_spec_validation():
    with pytest.raises(ArgumentError):
        SpaceSpec(dim=2, obstacles=((0.0, 1.0), (0.0, 1.0)))
    with pytest.raises(ArgumentError):
        SpaceSpec(dim=2, obstacles=((0.0, 1.0, 2.0),))
    assert not SpaceSpec(dim=3, group=GroupSpec.ANTIPODAL).acts_freely
    assert SpaceSpec(dim=3, group=GroupSpec.ANTIPODAL, puncture_origin=True).acts_freely
    assert GroupSpec.ANTIPODAL.order == 2

import numpy as np
import pytest

from napoleon.alignment.weiszfeld import weiszfeld
from napoleon.exceptions import TrivialTriple
from napoleon.geometry.fermat import (
    OBTUSE_COSINE,
    ANGLE_TOL,
    distance_sum,
    fermat_point,
    locate_fermat_point,
    vertex_cosines,
)
from napoleon.geometry.predicates import is_collinear
from napoleon.geometry.transforms import centroid
from napoleon.models.geometry import FermatRule, Triple


def test_equilateral_fermat_point_is_centroid(unit_equilateral):
    located = locate_fermat_point(unit_equilateral)
    assert located.rule is FermatRule.TORRICELLI
    np.testing.assert_allclose(located.point, centroid(unit_equilateral), atol=1e-14)


def test_obtuse_vertex_rule(obtuse):
    located = locate_fermat_point(obtuse)
    assert located.rule is FermatRule.VERTEX
    assert located.vertex_index == 2
    np.testing.assert_array_equal(located.point, [0.0, 0.2])


def test_interior_point_beats_vertices_and_centroid():
    x = Triple.of((0, 0), (1, 0), (0.5, 0.9))
    point = fermat_point(x)
    best = distance_sum(x, point)
    for candidate in [*x.vertices, centroid(x)]:
        assert best <= distance_sum(x, candidate)


@pytest.mark.parametrize(
    "vertices, expected",
    [
        (((0, 0), (1, 0), (2, 0)), 1),
        (((2, 0), (0, 0), (1, 0)), 2),
        (((0, 0, 0), (5, 5, 5), (1, 1, 1)), 2),
    ],
)
def test_collinear_uses_middle_vertex(vertices, expected):
    located = locate_fermat_point(Triple.of(*vertices))
    assert located.rule is FermatRule.COLLINEAR
    assert located.vertex_index == expected


def test_trivial_raises(trivial):
    with pytest.raises(TrivialTriple):
        fermat_point(trivial)


@pytest.mark.parametrize("dimension", [2, 3])
def test_matches_weiszfeld_on_random_triples(rng, dimension):
    for _ in range(300):
        x = Triple.from_array(rng.standard_normal((3, dimension)))
        located = locate_fermat_point(x)
        assert np.linalg.norm(located.point - weiszfeld(x)) <= 1e-8 * x.scale


def test_vertex_rule_fires_exactly_on_cosine_test(rng):
    fired = 0
    for _ in range(500):
        x = Triple.from_array(rng.standard_normal((3, 2)))
        assert not is_collinear(x)
        obtuse = vertex_cosines(x).min() <= OBTUSE_COSINE + ANGLE_TOL
        rule = locate_fermat_point(x).rule
        assert (rule is FermatRule.VERTEX) == obtuse
        fired += obtuse
    assert 0 < fired < 500

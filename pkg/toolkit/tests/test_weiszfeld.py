import numpy as np
import pytest

from napoleon.alignment.weiszfeld import weiszfeld
from napoleon.exceptions import NoConvergence, TrivialTriple
from napoleon.geometry.transforms import centroid
from napoleon.models.geometry import Triple


def test_equilateral_converges_to_centroid(unit_equilateral):
    np.testing.assert_allclose(weiszfeld(unit_equilateral), centroid(unit_equilateral), atol=1e-12)


def test_obtuse_returns_vertex(obtuse):
    np.testing.assert_allclose(weiszfeld(obtuse), [0.0, 0.2], atol=1e-12)


def test_first_order_condition_at_interior_point():
    x = Triple.of((0, 0), (4, 0), (0, 3))
    point = weiszfeld(x)
    diffs = x.vertices - point
    units = diffs / np.linalg.norm(diffs, axis=1, keepdims=True)
    assert np.linalg.norm(units.sum(axis=0)) <= 1e-8


def test_centroid_on_optimal_vertex_stops_immediately():
    x = Triple.of((-1, 0), (0, 0), (1, 0))
    np.testing.assert_array_equal(weiszfeld(x), [0.0, 0.0])


def test_trivial_raises(trivial):
    with pytest.raises(TrivialTriple):
        weiszfeld(trivial)


def test_iteration_budget():
    with pytest.raises(NoConvergence) as info:
        weiszfeld(Triple.of((0, 0), (4, 0), (0, 3)), max_iters=1)
    assert info.value.iterations == 1
    assert info.value.last_step > 0

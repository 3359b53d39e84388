import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from napoleon.geometry.frames import rotation_operator
from napoleon.geometry.predicates import equilaterality_residual
from napoleon.geometry.transforms import (
    centroid,
    compose_napoleon,
    double_outer_napoleon,
    equilateral_from_parameters,
    erected_vertex,
    napoleon,
    napoleon_iter,
    reduced_order,
    torricelli,
    torricelli_displacement,
)
from napoleon.models.geometry import QUARTER_TURN, RotationOperator, TransformKind, Triple
from napoleon.utils.sampling import collinear_triple

from tests.strategies import equilateral_triples, planar_rotations, well_scaled_triples

SQRT3 = math.sqrt(3.0)
INNER, OUTER = TransformKind.INNER, TransformKind.OUTER
QUARTER = RotationOperator.from_matrix(QUARTER_TURN)


# ============================================================================
# EJEMPLOS
# ============================================================================

def test_centroid_examples(unit_equilateral):
    np.testing.assert_allclose(centroid(unit_equilateral), [0.5, SQRT3 / 6.0])
    np.testing.assert_allclose(centroid(Triple.of((0, 0, 0), (3, 0, 0), (0, 3, 0))), [1.0, 1.0, 0.0])


def test_erected_vertex_examples():
    np.testing.assert_allclose(erected_vertex((0, 0), (1, 0), QUARTER, INNER), [0.5, SQRT3 / 2.0])
    np.testing.assert_allclose(erected_vertex((0, 0), (1, 0), QUARTER, OUTER), [0.5, -SQRT3 / 2.0])
    np.testing.assert_allclose(erected_vertex((1, 1), (1, 1), QUARTER, INNER), [1.0, 1.0])


def test_inner_torricelli_fixes_equilateral(unit_equilateral):
    np.testing.assert_allclose(torricelli(unit_equilateral, INNER).vertices, unit_equilateral.vertices, atol=1e-15)


def test_trivial_triple_is_fixed(trivial):
    for kind in TransformKind:
        np.testing.assert_array_equal(torricelli(trivial, kind).vertices, trivial.vertices)
        np.testing.assert_array_equal(napoleon(trivial, kind).vertices, trivial.vertices)
    np.testing.assert_array_equal(double_outer_napoleon(trivial).vertices, trivial.vertices)


def test_torricelli_matches_erected_vertices(right_triangle):
    R = rotation_operator(right_triangle)
    x1, x2, x3 = right_triangle.vertices
    expected = [
        erected_vertex(x2, x3, R, OUTER),
        erected_vertex(x3, x1, R, OUTER),
        erected_vertex(x1, x2, R, OUTER),
    ]
    np.testing.assert_allclose(torricelli(right_triangle, OUTER).vertices, expected, atol=1e-15)


def test_napoleon_of_equilateral(unit_equilateral):
    c = centroid(unit_equilateral)
    np.testing.assert_allclose(napoleon(unit_equilateral, INNER).vertices, np.tile(c, (3, 1)), atol=1e-15)
    np.testing.assert_allclose(
        napoleon(unit_equilateral, OUTER).vertices,
        [[1.0, SQRT3 / 3.0], [0.0, SQRT3 / 3.0], [0.5, -SQRT3 / 6.0]],
        atol=1e-15,
    )


def test_outer_napoleon_of_right_triangle_is_equilateral(right_triangle):
    assert equilaterality_residual(napoleon(right_triangle, OUTER)) <= 1e-12


def test_napoleon_is_mean_of_erected_triangles(right_triangle):
    # cada vértice de N es el centroide del triángulo levantado sobre el lado opuesto
    R = rotation_operator(right_triangle)
    x = right_triangle.vertices
    for kind in TransformKind:
        expected = [
            (x[(i + 1) % 3] + x[(i + 2) % 3] + erected_vertex(x[(i + 1) % 3], x[(i + 2) % 3], R, kind)) / 3.0
            for i in range(3)
        ]
        np.testing.assert_allclose(napoleon(right_triangle, kind).vertices, expected, atol=1e-15)


def test_double_outer_examples(unit_equilateral, right_triangle):
    np.testing.assert_allclose(double_outer_napoleon(unit_equilateral).vertices, unit_equilateral.vertices, atol=1e-15)
    np.testing.assert_allclose(
        double_outer_napoleon(right_triangle).vertices,
        napoleon(napoleon(right_triangle, OUTER), OUTER).vertices,
        atol=1e-10,
    )


def test_iteration_examples(right_triangle):
    c = centroid(right_triangle)
    np.testing.assert_allclose(napoleon_iter(right_triangle, INNER, 2).vertices, np.tile(c, (3, 1)))
    np.testing.assert_array_equal(
        napoleon_iter(right_triangle, OUTER, 4).vertices,
        napoleon_iter(right_triangle, OUTER, 2).vertices,
    )
    for kind in TransformKind:
        np.testing.assert_array_equal(napoleon_iter(right_triangle, kind, 0).vertices, right_triangle.vertices)


@pytest.mark.parametrize(
    "kind, k, expected",
    [(INNER, 0, 0), (INNER, 1, 1), (INNER, 5, 2), (OUTER, 3, 1), (OUTER, 4, 2), (OUTER, 7, 1)],
)
def test_reduced_order(kind, k, expected):
    assert reduced_order(kind, k) == expected


def test_negative_iteration_raises(right_triangle):
    with pytest.raises(ValueError):
        napoleon_iter(right_triangle, INNER, -1)
    with pytest.raises(ValueError):
        compose_napoleon(right_triangle, OUTER, -2)


def test_equilateral_from_parameters_orientation():
    y = equilateral_from_parameters(np.zeros(2), 0.0, 1.0, 1, np.eye(2))
    assert equilaterality_residual(y) <= 1e-15
    np.testing.assert_allclose(torricelli(y, INNER).vertices, y.vertices, atol=1e-14)


# ============================================================================
# PROPIEDADES
# ============================================================================

@settings(max_examples=300, deadline=None)
@given(x=well_scaled_triples())
def test_centroid_is_preserved(x):
    c = centroid(x)
    for kind in TransformKind:
        assert np.linalg.norm(centroid(torricelli(x, kind)) - c) <= 1e-10 * x.scale
        assert np.linalg.norm(centroid(napoleon(x, kind)) - c) <= 1e-10 * x.scale


@settings(max_examples=300, deadline=None)
@given(x=well_scaled_triples())
def test_displacements_are_equal(x):
    for kind in TransformKind:
        displacement = np.linalg.norm(torricelli(x, kind).vertices - x.vertices, axis=1)
        assert displacement.max() - displacement.min() <= 1e-10 * max(displacement.max(), x.scale)


@settings(max_examples=500, deadline=None)
@given(x=st.one_of(well_scaled_triples(), equilateral_triples()))
def test_napoleon_triangles_are_equilateral(x):
    for kind in TransformKind:
        assert equilaterality_residual(napoleon(x, kind), reference_scale=x.scale) <= 1e-10


@settings(max_examples=200, deadline=None)
@given(e=equilateral_triples())
def test_equilateral_collapses_and_reflects(e):
    c = centroid(e)
    assert np.max(np.linalg.norm(napoleon(e, INNER).vertices - c, axis=1)) <= 1e-10 * e.scale
    np.testing.assert_allclose(napoleon(e, OUTER).vertices, 2.0 * c - e.vertices, atol=1e-10 * e.scale)


@settings(max_examples=100, deadline=None)
@given(x=well_scaled_triples())
def test_iteration_shortcuts_match_composition(x):
    for kind in TransformKind:
        for k in range(7):
            fast = napoleon_iter(x, kind, k).vertices
            literal = compose_napoleon(x, kind, k).vertices
            assert np.max(np.linalg.norm(fast - literal, axis=1)) <= 1e-10 * x.scale


@settings(max_examples=300, deadline=None)
@given(x=well_scaled_triples())
def test_double_outer_matches_composition(x):
    literal = napoleon(napoleon(x, OUTER), OUTER).vertices
    assert np.max(np.linalg.norm(double_outer_napoleon(x).vertices - literal, axis=1)) <= 1e-10 * x.scale


@settings(max_examples=200, deadline=None)
@given(x=well_scaled_triples(dimensions=(2,)), Q=planar_rotations())
def test_napoleon_commutes_with_rotations(x, Q):
    shift = np.array([0.3, -1.7])
    moved = Triple.from_array(x.vertices @ Q.T + shift)
    for kind in TransformKind:
        expected = napoleon(x, kind).vertices @ Q.T + shift
        np.testing.assert_allclose(napoleon(moved, kind).vertices, expected, atol=1e-9 * x.scale)


def test_inner_displacement_below_outer(rng):
    for _ in range(100):
        x = Triple.from_array(rng.standard_normal((3, 3)))
        assert torricelli_displacement(x, INNER) < torricelli_displacement(x, OUTER)


def test_collinear_displacements_are_equal(rng):
    for _ in range(100):
        x = collinear_triple(rng, 3)
        inner, outer = torricelli_displacement(x, INNER), torricelli_displacement(x, OUTER)
        assert abs(inner - outer) <= 1e-9 * x.scale ** 2

import numpy as np
import pytest
from hypothesis import given, settings

from napoleon.alignment.closed_form import (
    alignment_objective,
    branch_alignment,
    optimal_equilateral_alignment,
)
from napoleon.alignment.kkt import kkt_residual
from napoleon.alignment.planar import (
    hessian_min_eigenvalue,
    planar_branch_solution,
    planar_parametrization,
)
from napoleon.exceptions import DimensionMismatch, NotEquilateral
from napoleon.geometry.frames import plane_frame, project_to_plane
from napoleon.geometry.predicates import equilaterality_residual
from napoleon.geometry.transforms import centroid, double_outer_napoleon, napoleon
from napoleon.models.geometry import TransformKind, Triple
from napoleon.utils.sampling import collinear_triple

from tests.strategies import well_scaled_triples


# ============================================================================
# OBJETIVO
# ============================================================================

def test_objective_examples(right_triangle, unit_equilateral):
    assert alignment_objective(right_triangle, right_triangle) == 0.0
    shifted = Triple.from_array(right_triangle.vertices + np.array([1.0, 0.0]))
    assert alignment_objective(right_triangle, shifted) == pytest.approx(3.0)

    reflected = napoleon(unit_equilateral, TransformKind.OUTER)
    spread = np.sum((unit_equilateral.vertices - centroid(unit_equilateral)) ** 2)
    assert alignment_objective(unit_equilateral, reflected) == pytest.approx(4.0 * spread)


def test_objective_dimension_mismatch(right_triangle):
    with pytest.raises(DimensionMismatch):
        alignment_objective(right_triangle, Triple.of((0, 0, 0), (1, 0, 0), (0, 1, 0)))


# ============================================================================
# FORMA CERRADA
# ============================================================================

def test_equilateral_is_its_own_alignment(unit_equilateral):
    result = optimal_equilateral_alignment(unit_equilateral)
    np.testing.assert_allclose(result.y.vertices, unit_equilateral.vertices, atol=1e-15)
    assert result.objective <= 1e-28
    assert result.unique


def test_trivial_alignment(trivial):
    result = optimal_equilateral_alignment(trivial)
    np.testing.assert_array_equal(result.y.vertices, trivial.vertices)
    assert result.objective == 0.0
    assert result.plane_frame is None
    assert not result.unique


def test_collinear_alignment_has_two_optima(collinear):
    result = optimal_equilateral_alignment(collinear)
    assert not result.unique
    assert result.alternate is not None
    assert equilaterality_residual(result.alternate) <= 1e-12
    assert result.branch_objectives[1] == pytest.approx(result.branch_objectives[-1], abs=1e-9)


def test_scalene_alignment_is_unique(right_triangle):
    result = optimal_equilateral_alignment(right_triangle)
    assert result.unique
    assert result.alternate is None
    assert result.branch_objectives[1] < result.branch_objectives[-1]
    np.testing.assert_array_equal(result.y.vertices, double_outer_napoleon(right_triangle).vertices)


def test_branch_alignment_rejects_other_orientations(right_triangle):
    with pytest.raises(ValueError):
        branch_alignment(right_triangle, 0)


def test_alignment_stays_in_plane(rng):
    for _ in range(50):
        x = Triple.from_array(rng.standard_normal((3, 4)))
        basis = plane_frame(x).basis
        offsets = optimal_equilateral_alignment(x).y.vertices - centroid(x)
        off_plane = offsets - offsets @ basis @ basis.T
        assert np.max(np.linalg.norm(off_plane, axis=1)) <= 1e-10 * x.scale


def test_collinear_branches_tie(rng):
    for _ in range(100):
        x = collinear_triple(rng, 2)
        result = optimal_equilateral_alignment(x)
        gap = abs(result.branch_objectives[1] - result.branch_objectives[-1])
        assert gap <= 1e-9 * max(1.0, x.scale ** 2)
        assert not result.unique


# ============================================================================
# REDUCCIÓN PLANAR
# ============================================================================

@pytest.mark.parametrize("k", [1, -1])
def test_planar_parametrization_identities(k):
    residuals = planar_parametrization(k).identity_residuals()
    assert max(residuals.values()) <= 1e-15
    assert hessian_min_eigenvalue(k) >= 1.0 - 1e-12


@pytest.mark.parametrize("k", [1, -1])
def test_planar_solution_matches_closed_form(rng, k):
    for _ in range(20):
        x = Triple.from_array(rng.standard_normal((3, 3)))
        projection = project_to_plane(x)
        planar = planar_branch_solution(projection.points, k)
        np.testing.assert_allclose(
            projection.lift(planar), branch_alignment(x, k).vertices, atol=1e-10 * x.scale
        )


# ============================================================================
# CERTIFICADO KKT
# ============================================================================

@settings(max_examples=300, deadline=None)
@given(x=well_scaled_triples(dimensions=(2, 3)))
def test_closed_form_is_stationary(x):
    y = optimal_equilateral_alignment(x).y
    assert kkt_residual(x, y).gradient_residual <= 1e-8


def test_single_outer_napoleon_is_not_stationary():
    x = Triple.of((0, 0), (4, 0), (1, 3))
    y = napoleon(x, TransformKind.OUTER)
    assert kkt_residual(x, y).gradient_residual > 1e-3


def test_equilateral_has_zero_multipliers(unit_equilateral):
    diagnostics = kkt_residual(unit_equilateral, unit_equilateral)
    assert diagnostics.lambda1 == pytest.approx(0.0, abs=1e-15)
    assert diagnostics.lambda2 == pytest.approx(0.0, abs=1e-15)
    assert diagnostics.gradient_residual == 0.0
    assert diagnostics.certifies()


def test_kkt_requires_equilateral_candidate(right_triangle):
    with pytest.raises(NotEquilateral):
        kkt_residual(right_triangle, right_triangle)


def test_kkt_equilateral_tolerance_is_configurable(right_triangle, settings):
    assert settings.KKT_EQUILATERAL_TOL == 1e-8
    diagnostics = kkt_residual(right_triangle, right_triangle, equilateral_tol=1.0)
    # y = x es estacionario con multiplicadores nulos
    assert diagnostics.gradient_residual == pytest.approx(0.0, abs=1e-15)

"""
Oráculo numérico independiente para la alineación equilátera.

Nunca usa la forma cerrada. Proyecta x a su plano y parametriza los
triángulos equiláteros etiquetados por centro, ángulo θ ∈ [0, 2π),
circunradio r ≥ 0 y orientación k ∈ {±1}. Para (θ, k) fijos el objetivo es
cuadrático convexo en (centro, r) y se resuelve en forma cerrada; θ se
explora en una grilla y se refina con búsqueda de sección áurea.
"""

import logging
import math
from typing import Callable

import numpy as np

from napoleon.alignment.closed_form import alignment_objective
from napoleon.geometry.frames import project_to_plane
from napoleon.geometry.predicates import DEFAULT_TOL
from napoleon.geometry.transforms import equilateral_from_parameters
from napoleon.models.alignment import AlignmentResult
from napoleon.models.geometry import Triple, as_triple

logger = logging.getLogger(__name__)

MIN_GRID = 32
BRANCH_TIE_TOL = 1e-9
GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0
TWO_PI = 2.0 * math.pi
PLANE_BASIS = np.eye(2)


# ============================================================================
# BÚSQUEDA DE SECCIÓN ÁUREA
# ============================================================================

def golden_section(f: Callable[[float], float], a: float, b: float, iters: int) -> float:
    """
    Minimiza f unimodal en [a, b] con un número fijo de reducciones.

    Returns:
        float: Mejor abscisa evaluada
    """
    c = b - (b - a) / GOLDEN_RATIO
    d = a + (b - a) / GOLDEN_RATIO
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) / GOLDEN_RATIO
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) / GOLDEN_RATIO
            fd = f(d)
    return c if fc < fd else d


# ============================================================================
# SUBPROBLEMA CONVEXO PARA (θ, k) FIJOS
# ============================================================================

def _unit_directions(theta: np.ndarray, k: int) -> np.ndarray:
    """Direcciones (…, 3, 2) de los vértices para ángulos θ y orientación k."""
    angles = np.asarray(theta)[..., None] + k * (TWO_PI / 3.0) * np.arange(3)
    return np.stack([np.cos(angles), np.sin(angles)], axis=-1)


def _fit(points: np.ndarray, theta: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Centro y radio óptimos para cada θ (r recortado a r ≥ 0).

    Returns:
        tuple: (centros (…, 2), radios (…), objetivos (…))
    """
    u = _unit_directions(theta, k)
    # Σ u_i = 0, así que el centro óptimo es la media y no depende de r
    center = np.broadcast_to(points.mean(axis=0), u.shape[:-2] + (2,))
    radius = np.maximum(np.sum((points - center[..., None, :]) * u, axis=(-1, -2)) / 3.0, 0.0)
    fitted = center[..., None, :] + radius[..., None, None] * u
    objective = np.sum((points - fitted) ** 2, axis=(-1, -2))
    return center, radius, objective


def _planar_triple(points: np.ndarray, theta: float, k: int) -> np.ndarray:
    center, radius, _ = _fit(points, np.array(theta), k)
    return equilateral_from_parameters(center, theta, float(radius), k, PLANE_BASIS).vertices


# ============================================================================
# ORÁCULO
# ============================================================================

def oracle_alignment(
    x: Triple,
    grid_n: int = 256,
    refine_iters: int = 80,
    theta_offset: float = 0.0,
    tol: float = DEFAULT_TOL,
) -> AlignmentResult:
    """
    Minimizador independiente del problema de alineación equilátera.

    Args:
        x: Triple de entrada
        grid_n: Puntos de la grilla en θ (≥ 32)
        refine_iters: Iteraciones de sección áurea por rama
        theta_offset: Desplazamiento de la grilla (semilla)
        tol: Tolerancia relativa de colinealidad para el marco

    Returns:
        AlignmentResult: Mejor triple encontrado y objetivos de ambas ramas

    Raises:
        ValueError: Si grid_n < 32
    """
    if grid_n < MIN_GRID:
        raise ValueError(f"grid_n debe ser ≥ {MIN_GRID}, recibido {grid_n}")
    x = as_triple(x)
    projection = project_to_plane(x, tol)
    if projection.frame is None:
        return AlignmentResult(y=x, objective=0.0, branch_k=1, unique=False,
                               branch_objectives={1: 0.0, -1: 0.0})

    points = projection.points
    grid = theta_offset + TWO_PI * np.arange(grid_n) / grid_n
    half_width = TWO_PI / grid_n

    candidates: dict[int, tuple[Triple, float]] = {}
    for k in (1, -1):
        _, _, objectives = _fit(points, grid, k)
        seed = float(grid[int(np.argmin(objectives))])
        theta = golden_section(
            lambda th: float(_fit(points, np.array(th), k)[2]),
            seed - half_width,
            seed + half_width,
            refine_iters,
        )
        y = Triple.from_array(projection.lift(_planar_triple(points, theta, k)))
        candidates[k] = (y, alignment_objective(x, y))

    branch_objectives = {k: objective for k, (_, objective) in candidates.items()}
    best_k = min(candidates, key=lambda k: candidates[k][1])
    y, objective = candidates[best_k]
    tie = abs(branch_objectives[1] - branch_objectives[-1]) <= BRANCH_TIE_TOL * max(1.0, x.scale ** 2)

    logger.debug(
        f"Oráculo: k={best_k}, objetivo={objective:.12g}, "
        f"ramas=({branch_objectives[1]:.6g}, {branch_objectives[-1]:.6g})"
    )
    return AlignmentResult(
        y=y,
        objective=objective,
        branch_k=best_k,
        unique=not tie,
        plane_frame=projection.frame,
        branch_objectives=branch_objectives,
        alternate=candidates[-best_k][0] if tie else None,
    )

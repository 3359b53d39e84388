"""
Punto de Fermat–Torricelli de un triple.

Si un ángulo interno es de al menos 120° el punto es ese vértice; en otro
caso es la intersección de las rectas que unen cada vértice con el vértice
opuesto de la configuración de Torricelli exterior.
"""

import logging

import numpy as np

from napoleon.exceptions import TrivialTriple
from napoleon.geometry.frames import project_to_plane
from napoleon.geometry.predicates import DEFAULT_TOL, is_collinear
from napoleon.geometry.transforms import torricelli
from napoleon.models.geometry import FermatPoint, FermatRule, TransformKind, Triple, as_triple

logger = logging.getLogger(__name__)

ANGLE_TOL = 1e-12
OBTUSE_COSINE = -0.5  # cos(120°)


def distance_sum(x: Triple, point: np.ndarray) -> float:
    """Σ‖x_i − p‖."""
    return float(np.sum(np.linalg.norm(as_triple(x).vertices - point, axis=1)))


def vertex_cosines(x: Triple) -> np.ndarray:
    """Coseno del ángulo interno en cada vértice (1.0 si un lado es nulo)."""
    vertices = as_triple(x).vertices
    cosines = np.ones(3)
    for i in range(3):
        u = vertices[(i + 1) % 3] - vertices[i]
        v = vertices[(i + 2) % 3] - vertices[i]
        norms = np.linalg.norm(u) * np.linalg.norm(v)
        if norms > 0.0:
            cosines[i] = float(u @ v) / norms
    return cosines


def obtuse_vertex(x: Triple, angle_tol: float = ANGLE_TOL) -> int | None:
    """Índice del vértice con ángulo ≥ 120° (prueba del coseno), o None."""
    cosines = vertex_cosines(x)
    index = int(np.argmin(cosines))
    if cosines[index] <= OBTUSE_COSINE + angle_tol:
        return index
    return None


def middle_vertex(x: Triple, tol: float = DEFAULT_TOL) -> int:
    """Índice del vértice central de un triple colineal (la mediana 1-D)."""
    projection = project_to_plane(x, tol)
    along = projection.points[:, 0]
    return int(np.argsort(along, kind="stable")[1])


def locate_fermat_point(
    x: Triple,
    tol: float = DEFAULT_TOL,
    angle_tol: float = ANGLE_TOL,
) -> FermatPoint:
    """
    Punto de Fermat con la regla que lo determinó.

    Args:
        x: Triple no trivial
        tol: Tolerancia relativa de colinealidad
        angle_tol: Tolerancia de la prueba del coseno

    Returns:
        FermatPoint: Punto, regla y suma de distancias

    Raises:
        TrivialTriple: Si los tres vértices coinciden
    """
    x = as_triple(x)
    if x.scale == 0.0:
        raise TrivialTriple("El punto de Fermat de un triple trivial está degenerado")

    if is_collinear(x, tol):
        index = middle_vertex(x, tol)
        point = x.vertices[index].copy()
        return FermatPoint(point=point, rule=FermatRule.COLLINEAR,
                           vertex_index=index, distance_sum=distance_sum(x, point))

    index = obtuse_vertex(x, angle_tol)
    if index is not None:
        point = x.vertices[index].copy()
        logger.debug(f"Regla de 120° en el vértice {index}")
        return FermatPoint(point=point, rule=FermatRule.VERTEX,
                           vertex_index=index, distance_sum=distance_sum(x, point))

    # Rectas x_i → T−(x)_i en coordenadas del plano; punto más cercano a las
    # tres rectas en mínimos cuadrados (sistema 2×2).
    projection = project_to_plane(x, tol)
    apexes = projection.frame.coordinates(
        torricelli(x, TransformKind.OUTER, tol).vertices - projection.center
    )
    normal_matrix = np.zeros((2, 2))
    rhs = np.zeros(2)
    for start, end in zip(projection.points, apexes):
        direction = end - start
        direction = direction / np.linalg.norm(direction)
        P = np.eye(2) - np.outer(direction, direction)
        normal_matrix += P
        rhs += P @ start
    planar = np.linalg.solve(normal_matrix, rhs)
    point = projection.lift(planar)[0]
    return FermatPoint(point=point, rule=FermatRule.TORRICELLI,
                       vertex_index=None, distance_sum=distance_sum(x, point))


def fermat_point(x: Triple, tol: float = DEFAULT_TOL) -> np.ndarray:
    """
    Punto de Fermat–Torricelli de x.

    Raises:
        TrivialTriple: Si los tres vértices coinciden
    """
    return locate_fermat_point(x, tol).point

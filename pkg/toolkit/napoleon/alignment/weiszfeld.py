"""
Algoritmo de Weiszfeld para el punto de Fermat–Torricelli (oráculo).

Promedio ponderado por 1/distancia desde el centroide; cuando un iterado cae
sobre un vértice se aplica la prueba de optimalidad del vértice y, si falla,
el paso modificado de Vardi–Zhang para salir de él.
"""

import logging

import numpy as np

from napoleon.exceptions import NoConvergence, TrivialTriple
from napoleon.models.geometry import Triple, as_triple

logger = logging.getLogger(__name__)


def _unit_sum(vertices: np.ndarray, point: np.ndarray, skip: int | None = None) -> np.ndarray:
    """Σ (x_i − p)/‖x_i − p‖ omitiendo el vértice skip."""
    total = np.zeros_like(point)
    for i, vertex in enumerate(vertices):
        if i == skip:
            continue
        diff = vertex - point
        norm = np.linalg.norm(diff)
        if norm > 0.0:
            total += diff / norm
    return total


def weiszfeld(x: Triple, tol: float = 1e-13, max_iters: int = 200_000) -> np.ndarray:
    """
    Mediana geométrica de los tres vértices.

    Args:
        x: Triple no trivial
        tol: Tolerancia relativa a la escala (paso y proximidad a vértices)
        max_iters: Máximo de iteraciones

    Returns:
        np.ndarray: Punto que minimiza Σ‖x_i − p‖

    Raises:
        TrivialTriple: Si los tres vértices coinciden
        NoConvergence: Si se agotan las iteraciones
    """
    x = as_triple(x)
    vertices = x.vertices
    scale = x.scale
    if scale == 0.0:
        raise TrivialTriple("La mediana de un triple trivial está degenerada")

    point = vertices.mean(axis=0)
    step = np.inf
    for iteration in range(1, max_iters + 1):
        distances = np.linalg.norm(vertices - point, axis=1)
        near = int(np.argmin(distances))

        if distances[near] <= tol * scale:
            # Prueba del vértice: ‖Σ vectores unitarios‖ ≤ 1 ⇒ óptimo
            pull = _unit_sum(vertices, vertices[near], skip=near)
            strength = np.linalg.norm(pull)
            if strength <= 1.0:
                logger.debug(f"Weiszfeld: vértice {near} óptimo tras {iteration} iteraciones")
                return vertices[near].copy()
            others = [i for i in range(3) if i != near]
            weights = 1.0 / distances[others]
            target = weights @ vertices[others] / weights.sum()
            candidate = (1.0 - 1.0 / strength) * target + (1.0 / strength) * vertices[near]
        else:
            weights = 1.0 / distances
            candidate = weights @ vertices / weights.sum()

        step = float(np.linalg.norm(candidate - point))
        point = candidate
        if step <= tol * scale:
            logger.debug(f"Weiszfeld convergió en {iteration} iteraciones")
            return point

    raise NoConvergence(max_iters, step)

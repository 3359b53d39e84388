"""
Problema de alineación reducido al plano.

Un triángulo equilátero planar queda determinado por (y1, y2) y su
orientación k: y3 = M y1 + Mᵀ y2 con M = ½I − k(√3/2)J. Para k fijo el
objetivo es fuertemente convexo y su mínimo resuelve un sistema 4×4.
"""

import math

import numpy as np

from napoleon.models.alignment import PlanarParametrization
from napoleon.models.geometry import QUARTER_TURN


def planar_parametrization(k: int) -> PlanarParametrization:
    """Parametrización de la rama k ∈ {+1, −1}."""
    if k not in (1, -1):
        raise ValueError(f"La rama debe ser +1 o -1, recibido {k}")
    M = 0.5 * np.eye(2) - k * (math.sqrt(3.0) / 2.0) * QUARTER_TURN
    return PlanarParametrization(k=k, M=M, R_quarter=QUARTER_TURN.copy())


def planar_branch_solution(points: np.ndarray, k: int) -> np.ndarray:
    """
    Mínimo del problema planar de la rama k resolviendo las ecuaciones normales.

    Args:
        points: Arreglo (3, 2) con el triple en coordenadas planares
        k: Orientación del triángulo buscado

    Returns:
        np.ndarray: Triple planar (3, 2) equilátero de orientación k
    """
    p = np.asarray(points, dtype=np.float64)
    param = planar_parametrization(k)
    M = param.M
    rhs = np.concatenate([p[0] + M.T @ p[2], p[1] + M @ p[2]])
    y12 = np.linalg.solve(param.reduced_hessian(), rhs)
    y1, y2 = y12[:2], y12[2:]
    return np.vstack([y1, y2, param.third_vertex(y1, y2)])


def hessian_min_eigenvalue(k: int) -> float:
    """Menor autovalor del Hessiano reducido (≥ 1 por convexidad fuerte)."""
    return float(np.linalg.eigvalsh(planar_parametrization(k).reduced_hessian()).min())

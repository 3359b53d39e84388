"""
Utilidades para generar triples aleatorios reproducibles.
Funciones auxiliares del arnés de verificación y de las pruebas.
"""

import numpy as np

from napoleon.geometry.transforms import equilateral_from_parameters
from napoleon.models.geometry import Triple

NEAR_COLLINEAR_OFFSET = 1e-12


def random_triple(rng: np.random.Generator, dimension: int) -> Triple:
    """
    Triple con coordenadas normales estándar.

    Example:
        >>> random_triple(np.random.default_rng(7), 2).dimension
        2
    """
    return Triple.from_array(rng.standard_normal((3, dimension)))


def random_orthonormal_pair(rng: np.random.Generator, dimension: int) -> np.ndarray:
    """Matriz d×2 con columnas ortonormales uniformes."""
    q, r = np.linalg.qr(rng.standard_normal((dimension, 2)))
    return q * np.sign(np.diag(r))


def random_rotation(rng: np.random.Generator, dimension: int) -> np.ndarray:
    """Matriz ortogonal d×d con determinante +1."""
    q, r = np.linalg.qr(rng.standard_normal((dimension, dimension)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def random_equilateral(rng: np.random.Generator, dimension: int) -> Triple:
    """
    Triple equilátero con centro, tamaño, giro, orientación y plano aleatorios.
    """
    basis = random_orthonormal_pair(rng, dimension)
    center = rng.standard_normal(dimension)
    radius = rng.uniform(0.2, 2.0)
    theta = rng.uniform(0.0, 2.0 * np.pi)
    k = 1 if rng.random() < 0.5 else -1
    return equilateral_from_parameters(center, theta, radius, k, basis)


def collinear_triple(rng: np.random.Generator, dimension: int) -> Triple:
    """Tres puntos sobre una recta aleatoria, en orden aleatorio."""
    origin = rng.standard_normal(dimension)
    direction = rng.standard_normal(dimension)
    direction /= np.linalg.norm(direction)
    positions = rng.standard_normal(3)
    return Triple.from_array(origin + np.outer(positions, direction))


def near_collinear_triple(rng: np.random.Generator, dimension: int) -> Triple:
    """Triple colineal con el tercer vértice desplazado 1e-12 en perpendicular."""
    line = collinear_triple(rng, dimension).vertices.copy()
    direction = line[1] - line[0]
    normal = rng.standard_normal(dimension)
    normal -= (normal @ direction) / (direction @ direction) * direction
    line[2] += NEAR_COLLINEAR_OFFSET * normal / np.linalg.norm(normal)
    return Triple.from_array(line)


def trivial_triple(rng: np.random.Generator, dimension: int) -> Triple:
    """Tres copias del mismo punto."""
    return Triple.from_array(np.tile(rng.standard_normal(dimension), (3, 1)))


def edge_cases(rng: np.random.Generator, dimension: int) -> list[tuple[str, Triple]]:
    """Casos borde inyectados en cada corrida de verificación."""
    return [
        ("collinear", collinear_triple(rng, dimension)),
        ("trivial", trivial_triple(rng, dimension)),
        ("near-collinear", near_collinear_triple(rng, dimension)),
        ("equilateral", random_equilateral(rng, dimension)),
    ]

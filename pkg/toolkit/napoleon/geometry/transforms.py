"""
Transformaciones de Torricelli y Napoleon en R^d y sus iteraciones.

Todas las funciones son puras: reciben un Triple (o array-like (3, d)) y
devuelven un Triple nuevo. Los triples triviales son puntos fijos.
"""

import logging
import math

import numpy as np

from napoleon.geometry.frames import rotation_operator, structure_operators
from napoleon.geometry.predicates import DEFAULT_TOL
from napoleon.models.geometry import (
    RotationOperator,
    TransformKind,
    Triple,
    as_point,
    as_triple,
)

logger = logging.getLogger(__name__)

HALF_SQRT3 = math.sqrt(3.0) / 2.0


# ============================================================================
# PRIMITIVAS
# ============================================================================

def centroid(x: Triple) -> np.ndarray:
    """
    Centroide c(x) = (x1 + x2 + x3) / 3.

    Args:
        x: Triple de entrada

    Returns:
        np.ndarray: Punto de R^d
    """
    return as_triple(x).vertices.mean(axis=0)


def centroid_triple(x: Triple) -> Triple:
    """Triple trivial 1_3 ⊗ c(x)."""
    x = as_triple(x)
    return Triple.from_array(np.tile(centroid(x), (3, 1)))


def erected_vertex(
    a: np.ndarray,
    b: np.ndarray,
    R: RotationOperator,
    kind: TransformKind,
) -> np.ndarray:
    """
    Vértice nuevo del triángulo equilátero levantado sobre el segmento ab.

    Se ubica sobre la mediatriz: punto medio + s·(√3/2)·R·(b − a), con
    s = +1 para interior y s = −1 para exterior.

    Args:
        a: Primer extremo del lado
        b: Segundo extremo del lado
        R: Operador de rotación del triple
        kind: Interior o exterior

    Returns:
        np.ndarray: Vértice levantado

    Raises:
        DimensionMismatch: Si las dimensiones no coinciden
    """
    a = as_point(a, R.dimension)
    b = as_point(b, R.dimension)
    kind = TransformKind(kind)
    return 0.5 * (a + b) + kind.sign * HALF_SQRT3 * R.apply(b - a)


# ============================================================================
# TORRICELLI Y NAPOLEON
# ============================================================================

def torricelli(x: Triple, kind: TransformKind, tol: float = DEFAULT_TOL) -> Triple:
    """
    Configuración de Torricelli T±(x) = (½K ± (√3/2)(I3⊗R_x)L) x.

    El vértice i del resultado es el vértice levantado sobre el lado
    opuesto al vértice i de x.

    Args:
        x: Triple de entrada
        kind: Interior (+) o exterior (−)
        tol: Tolerancia relativa de colinealidad para el marco

    Returns:
        Triple: Configuración de Torricelli
    """
    x = as_triple(x)
    kind = TransformKind(kind)
    ops = structure_operators(x.dimension)
    R = rotation_operator(x, tol)

    block_rotation = np.kron(np.eye(3), R.matrix)
    operator = 0.5 * ops.K + kind.sign * HALF_SQRT3 * (block_rotation @ ops.L)
    return Triple.from_flat(operator @ x.flat(), x.dimension)


def napoleon(x: Triple, kind: TransformKind, tol: float = DEFAULT_TOL) -> Triple:
    """
    Triángulo de Napoleon N±(x) = (Kx + T±(x)) / 3.

    El resultado es equilátero y comparte el centroide de x.
    """
    x = as_triple(x)
    ops = structure_operators(x.dimension)
    vertices = (ops.K @ x.flat() + torricelli(x, kind, tol).flat()) / 3.0
    return Triple.from_flat(vertices, x.dimension)


def torricelli_displacement(x: Triple, kind: TransformKind, tol: float = DEFAULT_TOL) -> float:
    """Σ‖T±(x)_i − x_i‖²."""
    x = as_triple(x)
    return float(np.sum((torricelli(x, kind, tol).vertices - x.vertices) ** 2))


# ============================================================================
# ITERACIONES
# ============================================================================

def compose_napoleon(x: Triple, kind: TransformKind, k: int, tol: float = DEFAULT_TOL) -> Triple:
    """
    Composición literal N±^k(x), sin atajos.

    Raises:
        ValueError: Si k < 0
    """
    if k < 0:
        raise ValueError(f"k debe ser no negativo, recibido {k}")
    result = as_triple(x)
    for _ in range(k):
        result = napoleon(result, kind, tol)
    return result


def reduced_order(kind: TransformKind, k: int) -> int:
    """
    Orden efectivo de N±^k tras aplicar los atajos de iteración.

    Interior: k ≥ 2 colapsa (se devuelve 2). Exterior: periodo 2 a partir de k = 1.
    """
    if k < 0:
        raise ValueError(f"k debe ser no negativo, recibido {k}")
    if k <= 2:
        return k
    if TransformKind(kind) is TransformKind.INNER:
        return 2
    return 2 - (k % 2)


def napoleon_iter(x: Triple, kind: TransformKind, k: int, tol: float = DEFAULT_TOL) -> Triple:
    """
    k-ésima iteración de Napoleon usando los atajos cerrados.

    - k = 0: identidad
    - interior, k ≥ 2: triple trivial en el centroide
    - exterior, k ≥ 3: se reduce k de dos en dos hasta k ∈ {1, 2};
      k = 2 usa la forma cerrada (2/3)x + (1/3)T+(x)

    Args:
        x: Triple de entrada
        kind: Interior o exterior
        k: Número de iteraciones (k ≥ 0)
        tol: Tolerancia relativa de colinealidad

    Returns:
        Triple: N±^k(x)

    Raises:
        ValueError: Si k < 0
    """
    x = as_triple(x)
    kind = TransformKind(kind)
    order = reduced_order(kind, k)
    if order != k:
        logger.debug(f"Atajo de iteración N{kind.symbol}^{k} → orden {order}")

    if order == 0:
        return x
    if order == 1:
        return napoleon(x, kind, tol)
    if kind is TransformKind.INNER:
        return centroid_triple(x)
    return double_outer_napoleon(x, tol)


def double_outer_napoleon(x: Triple, tol: float = DEFAULT_TOL) -> Triple:
    """
    Doble Napoleon exterior N−²(x) = (2/3)x + (1/3)T+(x).

    Es el triángulo equilátero óptimamente alineado con x.
    """
    x = as_triple(x)
    inner = torricelli(x, TransformKind.INNER, tol)
    return Triple.from_array((2.0 / 3.0) * x.vertices + (1.0 / 3.0) * inner.vertices)


# ============================================================================
# PARAMETRIZACIÓN DE TRIÁNGULOS EQUILÁTEROS
# ============================================================================

def equilateral_from_parameters(
    center: np.ndarray,
    theta: float,
    radius: float,
    k: int,
    basis: np.ndarray,
) -> Triple:
    """
    Triángulo equilátero de centro, ángulo, circunradio y orientación dados.

    El vértice i (i = 0, 1, 2) está en el ángulo θ + k·2πi/3 del plano
    generado por las columnas de basis (d×2).
    """
    angles = theta + k * (2.0 * np.pi / 3.0) * np.arange(3)
    planar = radius * np.column_stack([np.cos(angles), np.sin(angles)])
    return Triple.from_array(np.asarray(center) + planar @ np.asarray(basis).T)


# ============================================================================
# EJEMPLO DE USO
# ============================================================================

if __name__ == "__main__":
    x = Triple.of((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))

    print("=" * 60)
    print("📐 TRANSFORMACIONES DE TORRICELLI Y NAPOLEON")
    print("=" * 60)
    for kind in TransformKind:
        print(f"T{kind.symbol}(x) = {torricelli(x, kind).to_lists()}")
        print(f"N{kind.symbol}(x) = {napoleon(x, kind).to_lists()}")
    print(f"N-²(x) = {double_outer_napoleon(x).to_lists()}")
    print("=" * 60)

"""
Marcos del plano, operador de rotación R_x y operadores de estructura K, L.
"""

from functools import lru_cache
import logging

import numpy as np

from napoleon.exceptions import DimensionMismatch, TrivialTriple
from napoleon.geometry.predicates import (
    DEFAULT_TOL,
    is_collinear,
    offset_from_axis,
    reference_axis,
)
from napoleon.models.geometry import (
    QUARTER_TURN,
    PlanarProjection,
    PlaneFrame,
    RotationOperator,
    StructureOperators,
    Triple,
    as_triple,
)

logger = logging.getLogger(__name__)

PAIR_SUM_PATTERN = np.array([[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]])
CYCLIC_DIFFERENCE_PATTERN = np.array([[0.0, -1.0, 1.0], [1.0, 0.0, -1.0], [-1.0, 1.0, 0.0]])


# ============================================================================
# MARCO DEL PLANO
# ============================================================================

def collinear_normal(n: np.ndarray) -> np.ndarray:
    """
    Perpendicular determinista a n para triples colineales.

    En d = 2 es el cuarto de vuelta antihorario de n; en d ≥ 3 se toma el
    vector canónico con menor |componente| de n y se ortogonaliza contra n.
    """
    if n.shape[0] == 2:
        return QUARTER_TURN @ n

    axis = int(np.argmin(np.abs(n)))
    t = -n[axis] * n
    t[axis] += 1.0
    return t / np.linalg.norm(t)


def plane_frame(x: Triple, tol: float = DEFAULT_TOL) -> PlaneFrame:
    """
    Calcula el par ortonormal (n, t) en el que x está orientado positivamente.

    Args:
        x: Triple de entrada (no trivial)
        tol: Tolerancia relativa de colinealidad

    Returns:
        PlaneFrame: Marco ortonormal

    Raises:
        TrivialTriple: Si los tres vértices coinciden
        DimensionMismatch: Si la entrada no es un triple válido
    """
    x = as_triple(x)
    n = reference_axis(x, tol)
    if n is None:
        raise TrivialTriple("Triple trivial: no existe un plano que lo contenga")

    if is_collinear(x, tol):
        return PlaneFrame.from_vectors(n, collinear_normal(n))

    t = offset_from_axis(x, tol)
    t = t / np.linalg.norm(t)
    # reortogonalizar: en triples casi colineales una sola pasada pierde precisión
    t = t - (t @ n) * n
    t = t / np.linalg.norm(t)
    return PlaneFrame.from_vectors(n, t)


# ============================================================================
# OPERADOR DE ROTACIÓN
# ============================================================================

def rotation_operator(x: Triple, tol: float = DEFAULT_TOL) -> RotationOperator:
    """
    R_x = [n t]·J·[n t]^T, o la matriz cero si x es trivial.

    Args:
        x: Triple de entrada
        tol: Tolerancia relativa de colinealidad

    Returns:
        RotationOperator: Operador d×d
    """
    x = as_triple(x)
    try:
        frame = plane_frame(x, tol)
    except TrivialTriple:
        return RotationOperator.from_matrix(np.zeros((x.dimension, x.dimension)))

    basis = frame.basis
    return RotationOperator.from_matrix(basis @ QUARTER_TURN @ basis.T)


# ============================================================================
# OPERADORES DE ESTRUCTURA
# ============================================================================

@lru_cache(maxsize=16)
def structure_operators(dimension: int) -> StructureOperators:
    """
    K = patrón de sumas por pares ⊗ I_d y L = patrón de diferencias cíclicas ⊗ I_d.

    Raises:
        DimensionMismatch: Si d < 2
    """
    if dimension < 2:
        raise DimensionMismatch(f"Se requiere d ≥ 2, recibido d={dimension}")

    identity = np.eye(dimension)
    K = np.kron(PAIR_SUM_PATTERN, identity)
    L = np.kron(CYCLIC_DIFFERENCE_PATTERN, identity)
    K.setflags(write=False)
    L.setflags(write=False)
    logger.debug(f"Operadores de estructura construidos para d={dimension}")
    return StructureOperators(dimension=dimension, K=K, L=L)


# ============================================================================
# PROYECCIÓN AL PLANO
# ============================================================================

def project_to_plane(x: Triple, tol: float = DEFAULT_TOL) -> PlanarProjection:
    """
    Proyecta ortogonalmente x sobre su marco, centrado en el centroide.

    Los triples triviales se proyectan a tres ceros sin marco.
    """
    x = as_triple(x)
    center = x.vertices.mean(axis=0)
    try:
        frame = plane_frame(x, tol)
    except TrivialTriple:
        return PlanarProjection(center=center, points=np.zeros((3, 2)), frame=None)
    return PlanarProjection(
        center=center,
        points=frame.coordinates(x.vertices - center),
        frame=frame,
    )

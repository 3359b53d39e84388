"""
Alineación equilátera óptima en forma cerrada.

El doble Napoleon exterior N−²(x) = (2/3)x + (1/3)T+(x) minimiza la suma de
distancias al cuadrado entre vértices homólogos sobre todos los triples
equiláteros. La rama k = −1, (2/3)x + (1/3)T−(x), empata solo si x es colineal.
"""

import logging

import numpy as np

from napoleon.exceptions import DimensionMismatch, TrivialTriple
from napoleon.geometry.frames import plane_frame
from napoleon.geometry.predicates import DEFAULT_TOL, is_collinear
from napoleon.geometry.transforms import double_outer_napoleon, torricelli
from napoleon.models.alignment import AlignmentResult
from napoleon.models.geometry import TransformKind, Triple, as_triple

logger = logging.getLogger(__name__)


def alignment_objective(x: Triple, y: Triple) -> float:
    """
    Σ‖x_i − y_i‖².

    Raises:
        DimensionMismatch: Si x e y tienen dimensiones distintas
    """
    x = as_triple(x)
    y = as_triple(y)
    if x.dimension != y.dimension:
        raise DimensionMismatch(f"Dimensiones distintas: {x.dimension} y {y.dimension}")
    return float(np.sum((x.vertices - y.vertices) ** 2))


def branch_alignment(x: Triple, k: int, tol: float = DEFAULT_TOL) -> Triple:
    """
    Óptimo de la rama de orientación k: (2/3)x + (1/3)T_k(x).

    Args:
        x: Triple de entrada
        k: +1 (Torricelli interior) o −1 (Torricelli exterior)
        tol: Tolerancia relativa de colinealidad

    Returns:
        Triple: Triple equilátero óptimo para esa orientación
    """
    if k not in (1, -1):
        raise ValueError(f"La rama debe ser +1 o -1, recibido {k}")
    x = as_triple(x)
    if k == 1:
        return double_outer_napoleon(x, tol)
    outer = torricelli(x, TransformKind.OUTER, tol)
    return Triple.from_array((2.0 / 3.0) * x.vertices + (1.0 / 3.0) * outer.vertices)


def optimal_equilateral_alignment(x: Triple, tol: float = DEFAULT_TOL) -> AlignmentResult:
    """
    Triángulo equilátero óptimamente alineado con x.

    Args:
        x: Triple de entrada
        tol: Tolerancia relativa de colinealidad

    Returns:
        AlignmentResult: y = N−²(x), objetivo, rama +1 y bandera de unicidad.
            Para x colineal también expone el óptimo alternativo de la rama −1.
    """
    x = as_triple(x)
    y = double_outer_napoleon(x, tol)
    other = branch_alignment(x, -1, tol)
    collinear = is_collinear(x, tol)

    try:
        frame = plane_frame(x, tol)
    except TrivialTriple:
        frame = None

    objective = alignment_objective(x, y)
    branch_objectives = {1: objective, -1: alignment_objective(x, other)}
    if collinear:
        logger.info(f"Entrada colineal: dos óptimos con objetivo {objective:.6g}")

    return AlignmentResult(
        y=y,
        objective=objective,
        branch_k=1,
        unique=not collinear,
        plane_frame=frame,
        branch_objectives=branch_objectives,
        alternate=other if collinear else None,
    )

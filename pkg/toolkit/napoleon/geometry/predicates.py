"""
Predicados sobre triples: trivialidad, colinealidad y equilateralidad.
Todas las pruebas son relativas a la escala del triple.
"""

import numpy as np

from napoleon.models.geometry import Triple, as_triple

DEFAULT_TOL = 1e-9
EQUILATERAL_TOL = 1e-10

# lados por debajo de ROUNDING_FACTOR·eps·escala son ruido de redondeo
ROUNDING_FACTOR = 1024.0


def is_trivial(x: Triple) -> bool:
    """True si los tres vértices coinciden (escala nula)."""
    return as_triple(x).scale == 0.0


def reference_axis(x: Triple, tol: float = DEFAULT_TOL) -> np.ndarray | None:
    """
    Dirección n del marco: x2 − x1 normalizado, o x3 − x2 si x1 ≈ x2.

    Args:
        x: Triple de entrada
        tol: Tolerancia relativa a la escala

    Returns:
        np.ndarray | None: Vector unitario, o None para triples triviales
    """
    x = as_triple(x)
    scale = x.scale
    if scale == 0.0:
        return None

    x1, x2, x3 = x.vertices
    side = x2 - x1
    length = np.linalg.norm(side)
    if length <= tol * scale:
        side = x3 - x2
        length = np.linalg.norm(side)
    return side / length


def offset_from_axis(x: Triple, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Componente de x3 − x1 ortogonal a la dirección de referencia."""
    x = as_triple(x)
    n = reference_axis(x, tol)
    v = x[2] - x[0]
    if n is None:
        return np.zeros_like(v)
    return v - (v @ n) * n


def is_collinear(x: Triple, tol: float = DEFAULT_TOL) -> bool:
    """
    Prueba de colinealidad relativa.

    El triple es colineal si la proyección de x3 − x1 ortogonal a la
    dirección de referencia mide a lo sumo tol·escala. Los triples
    triviales son colineales.

    Args:
        x: Triple de entrada
        tol: Tolerancia relativa

    Returns:
        bool: True si es colineal
    """
    x = as_triple(x)
    scale = x.scale
    if scale == 0.0:
        return True
    return bool(np.linalg.norm(offset_from_axis(x, tol)) <= tol * scale)


def squared_sides(x: Triple) -> np.ndarray:
    """Cuadrados de los lados (s12, s13, s23)."""
    x1, x2, x3 = as_triple(x).vertices
    return np.array([
        np.sum((x1 - x2) ** 2),
        np.sum((x1 - x3) ** 2),
        np.sum((x2 - x3) ** 2),
    ])


def equilaterality_residual(x: Triple, reference_scale: float | None = None) -> float:
    """
    Desviación relativa de los lados al cuadrado respecto de su media.

    max_ij |s_ij − media| / media. Si los lados quedan al nivel del redondeo
    de las coordenadas de x (o de reference_scale, si es mayor) el triple se
    considera trivial y el residuo es 0.

    Args:
        x: Triple de entrada
        reference_scale: Escala contra la que se mide el redondeo, p. ej. la
            del triple del que x es imagen

    Returns:
        float: Residuo adimensional (0 para equiláteros y triples colapsados)
    """
    x = as_triple(x)
    sides = squared_sides(x)
    mean = sides.mean()
    reference = max(float(np.max(np.abs(x.vertices))), reference_scale or 0.0)
    if mean <= (ROUNDING_FACTOR * np.finfo(np.float64).eps * reference) ** 2:
        return 0.0
    return float(np.max(np.abs(sides - mean)) / mean)


def is_equilateral(x: Triple, tol: float = EQUILATERAL_TOL, reference_scale: float | None = None) -> bool:
    return equilaterality_residual(x, reference_scale) <= tol

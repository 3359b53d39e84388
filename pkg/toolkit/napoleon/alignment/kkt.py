"""
Certificado de estacionariedad de Lagrange para la alineación equilátera.

Para L(y, λ1, λ2) = Σ‖x_i − y_i‖² + λ1(‖y1−y2‖² − ‖y1−y3‖²)
                                    + λ2(‖y1−y2‖² − ‖y2−y3‖²)
se ajustan (λ1, λ2) por mínimos cuadrados sobre las 3d ecuaciones ∇_y L = 0.
"""

import logging

import numpy as np

from napoleon.exceptions import DimensionMismatch, NotEquilateral
from napoleon.geometry.predicates import equilaterality_residual
from napoleon.models.alignment import LagrangeDiagnostics
from napoleon.models.geometry import Triple, as_triple

logger = logging.getLogger(__name__)

KKT_EQUILATERAL_TOL = 1e-8


def stationarity_system(x: Triple, y: Triple) -> tuple[np.ndarray, np.ndarray]:
    """
    Sistema A·λ = b de los tres bloques de ∇_y L / 2.

    Returns:
        tuple: (A de 3d×2, b de 3d)
    """
    y1, y2, y3 = as_triple(y).vertices
    first = np.concatenate([y3 - y2, y2 - y1, -(y3 - y1)])
    second = np.concatenate([y1 - y2, y3 - y1, -(y3 - y2)])
    A = np.column_stack([first, second])
    b = -(as_triple(y).flat() - as_triple(x).flat())
    return A, b


def kkt_residual(
    x: Triple,
    y: Triple,
    equilateral_tol: float = KKT_EQUILATERAL_TOL,
) -> LagrangeDiagnostics:
    """
    Ajusta los multiplicadores y mide el residuo de estacionariedad.

    Args:
        x: Triple original
        y: Candidato equilátero
        equilateral_tol: Tolerancia de la precondición de equilateralidad

    Returns:
        LagrangeDiagnostics: λ1, λ2 y ‖Aλ − b‖ / escala(x)

    Raises:
        NotEquilateral: Si y no es equilátero dentro de la tolerancia
        DimensionMismatch: Si x e y tienen dimensiones distintas
    """
    x = as_triple(x)
    y = as_triple(y)
    if x.dimension != y.dimension:
        raise DimensionMismatch(f"Dimensiones distintas: {x.dimension} y {y.dimension}")

    residual = equilaterality_residual(y, reference_scale=x.scale)
    if residual > equilateral_tol:
        raise NotEquilateral(residual, equilateral_tol)

    A, b = stationarity_system(x, y)
    multipliers, *_ = np.linalg.lstsq(A, b, rcond=None)
    gap = float(np.linalg.norm(A @ multipliers - b))
    scale = x.scale
    if scale > 0.0:
        gap /= scale

    logger.debug(f"KKT: λ=({multipliers[0]:.3e}, {multipliers[1]:.3e}), residuo={gap:.3e}")
    return LagrangeDiagnostics(
        lambda1=float(multipliers[0]),
        lambda2=float(multipliers[1]),
        gradient_residual=gap,
    )

"""
Modelos Pydantic para la alineación equilátera óptima.
"""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from napoleon.models.geometry import QUARTER_TURN, PlaneFrame, Triple

BranchK = Literal[1, -1]


# ============================================================================
# RESULTADO DE ALINEACIÓN
# ============================================================================

class AlignmentResult(BaseModel):
    """
    Triángulo equilátero alineado con un triple dado.

    Attributes:
        y: Triple equilátero alineado
        objective: Suma de distancias al cuadrado entre vértices homólogos
        branch_k: Rama de orientación (+1 interior, −1 exterior)
        unique: False si la entrada es colineal
        plane_frame: Marco usado (None para triples triviales)
        branch_objectives: Objetivo óptimo de cada rama {+1, −1}
        alternate: Óptimo de la rama k = −1 cuando empata (entrada colineal)
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    y: Triple
    objective: float = Field(..., ge=0)
    branch_k: BranchK = 1
    unique: bool = True
    plane_frame: PlaneFrame | None = None
    branch_objectives: dict[int, float] = Field(default_factory=dict)
    alternate: Triple | None = None


# ============================================================================
# PARAMETRIZACIÓN PLANAR
# ============================================================================

class PlanarParametrization(BaseModel):
    """
    M = ½I − k(√3/2)·J para la rama k; y3 = M y1 + Mᵀ y2.

    Cumple M + Mᵀ = I, MᵀM = I y M² = −Mᵀ.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    k: BranchK
    M: np.ndarray
    R_quarter: np.ndarray = Field(default_factory=lambda: QUARTER_TURN.copy())

    def third_vertex(self, y1: np.ndarray, y2: np.ndarray) -> np.ndarray:
        return self.M @ y1 + self.M.T @ y2

    def reduced_hessian(self) -> np.ndarray:
        """Hessiano 4×4 [[2I, −M], [−Mᵀ, 2I]] del problema planar."""
        identity = np.eye(2)
        return np.block([[2.0 * identity, -self.M], [-self.M.T, 2.0 * identity]])

    def identity_residuals(self) -> dict[str, float]:
        """Normas de M + Mᵀ − I, MᵀM − I y M² + Mᵀ."""
        identity = np.eye(2)
        M = self.M
        return {
            "sum": float(np.linalg.norm(M + M.T - identity)),
            "orthogonal": float(np.linalg.norm(M.T @ M - identity)),
            "square": float(np.linalg.norm(M @ M + M.T)),
        }


# ============================================================================
# DIAGNÓSTICO KKT
# ============================================================================

class LagrangeDiagnostics(BaseModel):
    """Multiplicadores ajustados por mínimos cuadrados y residuo de estacionariedad."""

    lambda1: float
    lambda2: float
    gradient_residual: float = Field(..., ge=0)

    def certifies(self, tol: float = 1e-8) -> bool:
        return self.gradient_residual <= tol

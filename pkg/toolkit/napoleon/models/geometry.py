"""
Modelos Pydantic para la geometría de triples en R^d.
Define Triple, PlaneFrame, RotationOperator, TransformKind y StructureOperators.
"""

from enum import Enum
from typing import Any, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from napoleon.exceptions import DimensionMismatch


# ============================================================================
# CONSTANTES
# ============================================================================

ORTHONORMAL_TOL = 1e-12
QUARTER_TURN = np.array([[0.0, -1.0], [1.0, 0.0]])
QUARTER_TURN.setflags(write=False)


def _frozen_array(value: Any) -> np.ndarray:
    """Convierte a ndarray float64 de solo lectura."""
    array = np.array(value, dtype=np.float64)
    array.setflags(write=False)
    return array


# ============================================================================
# TIPO DE TRANSFORMACIÓN
# ============================================================================

class TransformKind(str, Enum):
    """
    Selector interior (+) / exterior (−) de las transformaciones T y N.
    """

    INNER = "inner"
    OUTER = "outer"

    @property
    def sign(self) -> int:
        """+1 para interior, −1 para exterior."""
        return 1 if self is TransformKind.INNER else -1

    @property
    def symbol(self) -> str:
        return "+" if self is TransformKind.INNER else "-"


# ============================================================================
# MODELO PRINCIPAL - TRIPLE
# ============================================================================

class Triple(BaseModel):
    """
    Triple ordenado de tres puntos en R^d (d ≥ 2).

    Es el objeto x = [x1, x2, x3] sobre el que actúan todas las
    transformaciones. Internamente es un arreglo (3, d) de solo lectura.

    Attributes:
        vertices: Arreglo (3, d) con los vértices por fila
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    vertices: np.ndarray = Field(..., description="Vértices del triple, forma (3, d)")

    # ========================================================================
    # VALIDADORES
    # ========================================================================

    @field_validator("vertices", mode="before")
    @classmethod
    def validate_vertices(cls, v: Any) -> np.ndarray:
        """
        Valida forma (3, d), d ≥ 2 y coordenadas finitas.

        Raises:
            ValueError: Si la forma o los valores no son válidos
        """
        rows = list(v) if not isinstance(v, np.ndarray) else v
        if len(rows) != 3:
            raise ValueError(f"Un triple tiene exactamente 3 vértices, recibidos {len(rows)}")
        widths = {len(np.atleast_1d(row)) for row in rows}
        if len(widths) != 1:
            raise ValueError(f"Vértices con dimensiones distintas: {sorted(widths)}")
        array = _frozen_array(rows)
        if array.ndim != 2 or array.shape[1] < 2:
            raise ValueError("Se requiere dimensión d ≥ 2 (incrustar R^1 en R^2)")
        if not np.all(np.isfinite(array)):
            raise ValueError("Todas las coordenadas deben ser finitas")
        return array

    # ========================================================================
    # CONSTRUCTORES
    # ========================================================================

    @classmethod
    def of(cls, *points: Sequence[float]) -> "Triple":
        """
        Construye un triple a partir de tres puntos.

        Raises:
            DimensionMismatch: Si los puntos no forman un triple válido
        """
        return as_triple(points)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "Triple":
        """Envuelve un arreglo (3, d) ya calculado, sin revalidar."""
        return cls.model_construct(vertices=_frozen_array(array))

    @classmethod
    def from_flat(cls, vector: np.ndarray, dimension: int) -> "Triple":
        """Inverso de flat(): vector de R^{3d} a triple."""
        return cls.from_array(np.asarray(vector, dtype=np.float64).reshape(3, dimension))

    # ========================================================================
    # PROPIEDADES
    # ========================================================================

    @property
    def dimension(self) -> int:
        return int(self.vertices.shape[1])

    @property
    def scale(self) -> float:
        """Máxima distancia entre pares de vértices."""
        x1, x2, x3 = self.vertices
        return float(max(
            np.linalg.norm(x2 - x1),
            np.linalg.norm(x3 - x1),
            np.linalg.norm(x3 - x2),
        ))

    def flat(self) -> np.ndarray:
        """Vector apilado x ∈ R^{3d}."""
        return self.vertices.reshape(-1)

    def __getitem__(self, index: int) -> np.ndarray:
        return self.vertices[index]

    def to_lists(self) -> list[list[float]]:
        return [[float(c) for c in row] for row in self.vertices]


def as_triple(value: "Triple | Any") -> Triple:
    """
    Normaliza un Triple o un array-like (3, d) a Triple.

    Raises:
        DimensionMismatch: Si la entrada no es un triple válido
    """
    if isinstance(value, Triple):
        return value
    try:
        return Triple(vertices=value)
    except ValidationError as e:
        message = e.errors()[0].get("msg", str(e))
        raise DimensionMismatch(message) from None
    except (TypeError, ValueError) as e:
        raise DimensionMismatch(str(e)) from None


def as_point(value: Any, dimension: int | None = None) -> np.ndarray:
    """
    Convierte a punto de R^d comprobando la dimensión.

    Raises:
        DimensionMismatch: Si la dimensión no coincide o d < 2
    """
    point = np.asarray(value, dtype=np.float64)
    if point.ndim != 1 or point.shape[0] < 2:
        raise DimensionMismatch(f"Punto inválido con forma {point.shape}")
    if dimension is not None and point.shape[0] != dimension:
        raise DimensionMismatch(f"Punto de dimensión {point.shape[0]}, se esperaba {dimension}")
    return point


# ============================================================================
# MARCO DEL PLANO Y OPERADOR DE ROTACIÓN
# ============================================================================

class PlaneFrame(BaseModel):
    """
    Par ortonormal (n, t) que genera un plano que contiene al triple,
    en el que el triple está orientado positivamente.

    Attributes:
        n: Vector unitario en R^d
        t: Vector unitario en R^d, ortogonal a n
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: np.ndarray
    t: np.ndarray

    @field_validator("n", "t", mode="before")
    @classmethod
    def validate_unit(cls, v: Any) -> np.ndarray:
        array = _frozen_array(v)
        if array.ndim != 1 or abs(np.linalg.norm(array) - 1.0) > ORTHONORMAL_TOL:
            raise ValueError("Los vectores del marco deben ser unitarios")
        return array

    @field_validator("t")
    @classmethod
    def validate_orthogonal(cls, t: np.ndarray, info) -> np.ndarray:
        n = info.data.get("n")
        if n is not None and (n.shape != t.shape or abs(float(n @ t)) > ORTHONORMAL_TOL):
            raise ValueError("n y t deben ser ortogonales y de igual dimensión")
        return t

    @classmethod
    def from_vectors(cls, n: np.ndarray, t: np.ndarray) -> "PlaneFrame":
        """Construye el marco a partir de vectores ya ortonormalizados."""
        return cls.model_construct(n=_frozen_array(n), t=_frozen_array(t))

    @property
    def dimension(self) -> int:
        return int(self.n.shape[0])

    @property
    def basis(self) -> np.ndarray:
        """Matriz d×2 [n t]."""
        return np.column_stack([self.n, self.t])

    def coordinates(self, vectors: np.ndarray) -> np.ndarray:
        """Coordenadas (n, t) de vectores de R^d (por fila)."""
        return np.asarray(vectors) @ self.basis

    def lift(self, planar: np.ndarray) -> np.ndarray:
        """Inverso de coordinates() sobre el plano."""
        return np.asarray(planar) @ self.basis.T


class RotationOperator(BaseModel):
    """
    Operador R_x de d×d: rotación de +π/2 en span(n, t), cero en el complemento.
    Es la matriz cero para triples triviales.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def validate_skew(cls, v: Any) -> np.ndarray:
        array = _frozen_array(v)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError("El operador debe ser una matriz cuadrada")
        if not np.allclose(array, -array.T, atol=ORTHONORMAL_TOL):
            raise ValueError("El operador de rotación debe ser antisimétrico")
        return array

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "RotationOperator":
        return cls.model_construct(matrix=_frozen_array(matrix))

    @property
    def is_zero(self) -> bool:
        return not np.any(self.matrix)

    def apply(self, vector: np.ndarray) -> np.ndarray:
        return self.matrix @ vector


# ============================================================================
# OPERADORES DE ESTRUCTURA K Y L
# ============================================================================

class StructureOperators(BaseModel):
    """
    Operadores K (suma de pares) y L (diferencia cíclica) de 3d×3d,
    ambos de la forma patrón ⊗ I_d.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dimension: int = Field(..., ge=2)
    K: np.ndarray
    L: np.ndarray


# ============================================================================
# PROYECCIÓN PLANAR Y PUNTO DE FERMAT
# ============================================================================

class PlanarProjection(BaseModel):
    """
    Triple expresado en coordenadas (n, t) de su marco, relativo al centroide.

    Attributes:
        center: Centroide del triple en R^d
        points: Arreglo (3, 2) de coordenadas planares
        frame: Marco del plano (None para triples triviales)
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    center: np.ndarray
    points: np.ndarray
    frame: PlaneFrame | None = None

    def lift(self, planar: np.ndarray) -> np.ndarray:
        """Lleva puntos planares (k, 2) de vuelta a R^d."""
        planar = np.atleast_2d(planar)
        if self.frame is None:
            return np.tile(self.center, (planar.shape[0], 1))
        return self.center + self.frame.lift(planar)


class FermatRule(str, Enum):
    """Regla que determinó el punto de Fermat."""

    VERTEX = "vertex"          # ángulo interno ≥ 120°
    TORRICELLI = "torricelli"  # intersección de las rectas de Torricelli
    COLLINEAR = "collinear"    # vértice medio de tres puntos alineados


class FermatPoint(BaseModel):
    """Punto de Fermat–Torricelli junto con la regla aplicada."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    point: np.ndarray
    rule: FermatRule
    vertex_index: int | None = Field(default=None, ge=0, le=2)
    distance_sum: float = Field(..., ge=0)

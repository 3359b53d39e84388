"""
Modelos Pydantic para registros de archivos .jsonl.
Cada línea del archivo es un objeto con al menos id y vertices.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic_core import PydanticCustomError

from napoleon.models.geometry import Triple, as_triple

DIMENSION_MISMATCH = "dimension_mismatch"


# ============================================================================
# MODELO PRINCIPAL - TRIPLE RECORD
# ============================================================================

class TripleRecord(BaseModel):
    """
    Registro de un triple en disco.

    Attributes:
        id: Identificador del registro
        dimension: Dimensión d (se deduce de vertices si falta)
        vertices: Tres filas de d números
        tags: Etiquetas opcionales
    """

    model_config = ConfigDict(extra="ignore", allow_inf_nan=False)

    id: str = Field(..., description="Identificador del registro", examples=["t1"])
    dimension: int = Field(default=0, ge=0, description="Dimensión d de los vértices")
    vertices: list[list[float]] = Field(
        ...,
        description="Tres vértices de d coordenadas",
        examples=[[[0, 0], [1, 0], [0, 1]]],
    )
    tags: Optional[list[str]] = None

    # ========================================================================
    # VALIDADORES
    # ========================================================================

    @model_validator(mode="after")
    def validate_shape(self) -> "TripleRecord":
        """
        Valida 3 filas de igual ancho y deduce la dimensión.

        Raises:
            ValueError: Si la forma no es (3, d) o dimension no coincide
        """
        if len(self.vertices) != 3:
            raise ValueError(f"se esperaban 3 vértices, recibidos {len(self.vertices)}")
        widths = {len(row) for row in self.vertices}
        if len(widths) != 1:
            raise PydanticCustomError(
                DIMENSION_MISMATCH, "vértices con anchos distintos: {widths}", {"widths": str(sorted(widths))}
            )
        width = widths.pop()
        if width < 2:
            raise PydanticCustomError(DIMENSION_MISMATCH, "se requiere d ≥ 2, recibido d={width}", {"width": width})
        if self.dimension == 0:
            self.dimension = width
        elif self.dimension != width:
            raise PydanticCustomError(
                DIMENSION_MISMATCH,
                "dimension declarada {declared}, filas de {width}",
                {"declared": self.dimension, "width": width},
            )
        return self

    # ========================================================================
    # CONVERSIONES
    # ========================================================================

    def to_triple(self) -> Triple:
        """
        Convierte el registro a Triple.

        Raises:
            DimensionMismatch: Si las coordenadas no forman un triple válido
        """
        return as_triple(self.vertices)

    @classmethod
    def from_triple(cls, record_id: str, triple: Triple, tags: Optional[list[str]] = None) -> "TripleRecord":
        """Crea un registro a partir de un Triple calculado."""
        return cls(id=record_id, dimension=triple.dimension, vertices=triple.to_lists(), tags=tags)


# ============================================================================
# REGISTROS DE SALIDA
# ============================================================================

class AlignmentRecord(TripleRecord):
    """Triple alineado con el objetivo, la unicidad y (opcionalmente) la brecha del oráculo."""

    objective: float = Field(..., ge=0)
    unique: bool
    branch_k: int = 1
    branch_objectives: dict[str, float] = Field(default_factory=dict)
    alternate_vertices: Optional[list[list[float]]] = None
    oracle_objective: Optional[float] = None
    oracle_gap: Optional[float] = None


class FermatRecord(TripleRecord):
    """Punto de Fermat de un triple (vertices conserva el triple de entrada)."""

    point: list[float]
    rule: str
    distance_sum: float = Field(..., ge=0)
    weiszfeld_point: Optional[list[float]] = None
    weiszfeld_gap: Optional[float] = None

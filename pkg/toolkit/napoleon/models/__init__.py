"""
Módulo de Modelos Pydantic.
Contiene los tipos geométricos, resultados de alineación, registros y reportes.
"""

# Tipos geométricos
from napoleon.models.geometry import (
    FermatPoint,
    FermatRule,
    PlanarProjection,
    PlaneFrame,
    RotationOperator,
    StructureOperators,
    TransformKind,
    Triple,
    as_point,
    as_triple,
)

# Alineación
from napoleon.models.alignment import (
    AlignmentResult,
    LagrangeDiagnostics,
    PlanarParametrization,
)

# Registros de entrada/salida
from napoleon.models.records import (
    AlignmentRecord,
    FermatRecord,
    TripleRecord,
)

# Reportes
from napoleon.models.report import BatchSummary, CheckSummary, VerificationReport


__all__ = [
    # Geometría
    'FermatPoint',
    'FermatRule',
    'PlanarProjection',
    'PlaneFrame',
    'RotationOperator',
    'StructureOperators',
    'TransformKind',
    'Triple',
    'as_point',
    'as_triple',

    # Alineación
    'AlignmentResult',
    'LagrangeDiagnostics',
    'PlanarParametrization',

    # Registros
    'AlignmentRecord',
    'FermatRecord',
    'TripleRecord',

    # Reportes
    'BatchSummary',
    'CheckSummary',
    'VerificationReport',
]

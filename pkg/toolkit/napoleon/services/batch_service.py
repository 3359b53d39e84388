"""
Servicio de procesamiento por lotes de archivos de triples.
Aplica transformaciones, iteraciones, alineación y punto de Fermat registro a
registro; un registro inválido nunca aborta el lote.
"""

import logging
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from napoleon.alignment.closed_form import optimal_equilateral_alignment
from napoleon.alignment.oracle import oracle_alignment
from napoleon.alignment.weiszfeld import weiszfeld
from napoleon.config import Settings, get_settings
from napoleon.database.jsonl_db import JSONLinesDatabase
from napoleon.exceptions import NapoleonError
from napoleon.geometry.fermat import locate_fermat_point
from napoleon.geometry.transforms import napoleon, napoleon_iter, reduced_order, torricelli
from napoleon.models.geometry import TransformKind
from napoleon.models.records import AlignmentRecord, FermatRecord, TripleRecord
from napoleon.models.report import BatchSummary

logger = logging.getLogger(__name__)

OPERATIONS = ("torricelli", "napoleon")
OPERATION_PREFIX = {"torricelli": "T", "napoleon": "N"}


class BatchService:
    """
    Servicio para procesar listas de TripleRecord.

    Cada método devuelve los registros de salida en el orden de entrada junto
    con un BatchSummary con los identificadores rechazados.

    Attributes:
        settings: Configuración (tolerancias y oráculos)
        tol: Tolerancia relativa de colinealidad usada en todo el lote
    """

    def __init__(self, settings: Settings | None = None, tol: float | None = None):
        """Inicializa el servicio; tol sobrescribe COLLINEAR_TOL solo para este lote."""
        self.settings = settings or get_settings()
        self.tol = self.settings.COLLINEAR_TOL if tol is None else tol
        logger.info(f"BatchService inicializado (tol={self.tol:g})")

    # ========================================================================
    # ENTRADA / SALIDA
    # ========================================================================

    def load(self, path: Path | str) -> tuple[list[TripleRecord], BatchSummary]:
        """
        Lee un archivo de triples aislando las líneas inválidas.

        Raises:
            StorageError: Si el archivo no se puede abrir
        """
        records, errors = JSONLinesDatabase(path).read_tolerant(TripleRecord)
        return records, BatchSummary(processed=len(records), failed=[str(e) for e in errors])

    def save(self, path: Path | str, records: Sequence[TripleRecord]) -> None:
        """
        Escribe los registros en orden.

        Raises:
            StorageError: Si el archivo no se puede escribir
        """
        JSONLinesDatabase(path).write(records)
        logger.info(f"💾 {len(records)} registros escritos en {path}")

    # ========================================================================
    # OPERACIONES
    # ========================================================================

    def transform(
        self, records: Sequence[TripleRecord], kind: TransformKind, op: str = "napoleon"
    ) -> tuple[list[TripleRecord], BatchSummary]:
        """
        Aplica T± o N± a cada registro (sufijo de id ".T+", ".N-", ...).

        Args:
            records: Registros de entrada
            kind: Interior o exterior
            op: "torricelli" o "napoleon"
        """
        if op not in OPERATIONS:
            raise ValueError(f"Operación desconocida: {op}")
        kind = TransformKind(kind)
        apply = torricelli if op == "torricelli" else napoleon
        suffix = f".{OPERATION_PREFIX[op]}{kind.symbol}"

        def handle(record: TripleRecord) -> TripleRecord:
            result = apply(record.to_triple(), kind, self.tol)
            return TripleRecord.from_triple(record.id + suffix, result, record.tags)

        return self._process(records, handle, f"{OPERATION_PREFIX[op]}{kind.symbol}")

    def iterate(
        self, records: Sequence[TripleRecord], kind: TransformKind, k: int
    ) -> tuple[list[TripleRecord], BatchSummary]:
        """
        Aplica N±^k con los atajos de iteración (sufijo ".N+^k").

        Raises:
            ValueError: Si k < 0
        """
        kind = TransformKind(kind)
        order = reduced_order(kind, k)
        if order != k:
            logger.info(f"⚡ Atajo de iteración: N{kind.symbol}^{k} se evalúa con orden {order}")
        suffix = f".N{kind.symbol}^{k}"

        def handle(record: TripleRecord) -> TripleRecord:
            result = napoleon_iter(record.to_triple(), kind, k, self.tol)
            return TripleRecord.from_triple(record.id + suffix, result, record.tags)

        return self._process(records, handle, f"N{kind.symbol}^{k}")

    def align(
        self,
        records: Sequence[TripleRecord],
        with_oracle: bool = False,
        grid_n: int | None = None,
        refine_iters: int | None = None,
    ) -> tuple[list[AlignmentRecord], BatchSummary]:
        """
        Alineación equilátera óptima; con with_oracle añade la brecha del oráculo.

        La brecha es objetivo(oráculo) − objetivo(forma cerrada).
        """
        grid_n = grid_n or self.settings.ORACLE_GRID_N
        refine_iters = refine_iters or self.settings.ORACLE_REFINE_ITERS

        def handle(record: TripleRecord) -> AlignmentRecord:
            x = record.to_triple()
            result = optimal_equilateral_alignment(x, self.tol)
            extra = {}
            if with_oracle:
                oracle = oracle_alignment(x, grid_n, refine_iters, tol=self.tol)
                extra = {
                    "oracle_objective": oracle.objective,
                    "oracle_gap": oracle.objective - result.objective,
                }
            return AlignmentRecord(
                id=record.id,
                dimension=x.dimension,
                vertices=result.y.to_lists(),
                tags=record.tags,
                objective=result.objective,
                unique=result.unique,
                branch_k=result.branch_k,
                branch_objectives={f"{k:+d}": value for k, value in result.branch_objectives.items()},
                alternate_vertices=result.alternate.to_lists() if result.alternate is not None else None,
                **extra,
            )

        return self._process(records, handle, "alineación")

    def fermat(
        self, records: Sequence[TripleRecord], with_oracle: bool = False
    ) -> tuple[list[FermatRecord], BatchSummary]:
        """
        Punto de Fermat con la regla aplicada; con with_oracle, también Weiszfeld.

        Los triples triviales se rechazan (TrivialTriple) sin detener el lote.
        """
        s = self.settings

        def handle(record: TripleRecord) -> FermatRecord:
            x = record.to_triple()
            located = locate_fermat_point(x, self.tol, s.ANGLE_TOL)
            extra = {}
            if with_oracle:
                median = weiszfeld(x, s.WEISZFELD_TOL, s.WEISZFELD_MAX_ITERS)
                extra = {
                    "weiszfeld_point": median.tolist(),
                    "weiszfeld_gap": float(np.linalg.norm(median - located.point)),
                }
            return FermatRecord(
                id=record.id,
                dimension=x.dimension,
                vertices=record.vertices,
                tags=record.tags,
                point=located.point.tolist(),
                rule=located.rule.value,
                distance_sum=located.distance_sum,
                **extra,
            )

        return self._process(records, handle, "Fermat")

    # ========================================================================
    # MÉTODOS PRIVADOS
    # ========================================================================

    def _process(
        self,
        records: Sequence[TripleRecord],
        handle: Callable[[TripleRecord], TripleRecord],
        label: str,
    ) -> tuple[list, BatchSummary]:
        """Aplica handle a cada registro, registrando y omitiendo los que fallan."""
        outputs = []
        summary = BatchSummary()
        for record in records:
            try:
                outputs.append(handle(record))
            except (NapoleonError, ValueError) as e:
                logger.error(f"❌ Registro {record.id!r} omitido ({label}): {e}")
                summary.failed.append(record.id)
        summary.processed = len(outputs)
        logger.info(f"✅ {label}: {summary.processed} procesados, {len(summary.failed)} omitidos")
        return outputs, summary

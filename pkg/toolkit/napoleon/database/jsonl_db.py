"""
Sistema de persistencia con archivos JSON Lines (.jsonl).
Un objeto JSON por línea; lectura en streaming y escritura determinista.
"""

import json
import logging
from pathlib import Path
from typing import Iterator, Sequence, TypeVar

from pydantic import BaseModel, ValidationError

from napoleon.exceptions import DimensionMismatch, RecordParseError, StorageError
from napoleon.models.records import DIMENSION_MISMATCH, TripleRecord

logger = logging.getLogger(__name__)

RecordT = TypeVar("RecordT", bound=TripleRecord)


class JSONLinesDatabase:
    """
    Clase para gestionar registros en archivos JSON Lines.

    Los números se escriben con la representación más corta que recupera
    exactamente el mismo double (a lo sumo 17 dígitos significativos),
    por lo que read(write(r)) reproduce las coordenadas bit a bit.

    Attributes:
        file_path (Path): Ruta al archivo .jsonl
    """

    def __init__(self, file_path: Path | str):
        """
        Inicializa la base de datos.

        Args:
            file_path: Ruta al archivo .jsonl
        """
        self.file_path = Path(file_path)

    # ========================================================================
    # LECTURA
    # ========================================================================

    def _raw_lines(self) -> Iterator[tuple[int, str]]:
        """
        Itera (número de línea, texto) saltando líneas en blanco.

        Raises:
            StorageError: Si el archivo no existe o no se puede leer
        """
        try:
            handle = open(self.file_path, "r", encoding="utf-8")
        except OSError as e:
            logger.error(f"Error abriendo {self.file_path}: {e}")
            raise StorageError(f"No se puede leer {self.file_path}: {e}") from e

        with handle:
            for line_number, line in enumerate(handle, start=1):
                if line.strip():
                    yield line_number, line

    @staticmethod
    def decode_line(line_number: int, line: str) -> dict:
        """
        Decodifica una línea como objeto JSON.

        Raises:
            RecordParseError: Si la línea no es un objeto JSON
        """
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise RecordParseError(line_number, f"JSON inválido ({e.msg})") from None
        if not isinstance(data, dict):
            raise RecordParseError(line_number, "se esperaba un objeto JSON")
        return data

    def iter_lines(self) -> Iterator[tuple[int, dict]]:
        """
        Itera (número de línea, objeto); la primera línea inválida aborta.

        Raises:
            StorageError: Si el archivo no existe o no se puede leer
            RecordParseError: Si una línea no es un objeto JSON
        """
        for line_number, line in self._raw_lines():
            yield line_number, self.decode_line(line_number, line)

    def parse_record(self, line_number: int, data: dict, model: type[RecordT] = TripleRecord) -> RecordT:
        """
        Valida un objeto como registro.

        Raises:
            DimensionMismatch: Si los vértices tienen anchos distintos
            RecordParseError: Para cualquier otro error de forma
        """
        try:
            return model.model_validate(data)
        except ValidationError as e:
            error = e.errors()[0]
            if error["type"] == DIMENSION_MISMATCH:
                raise DimensionMismatch(f"Línea {line_number}: {error['msg']}") from None
            location = ".".join(str(part) for part in error.get("loc", ()))
            detail = f"{location}: {error['msg']}" if location else error["msg"]
            raise RecordParseError(line_number, detail) from None

    def read(self, model: type[RecordT] = TripleRecord) -> list[RecordT]:
        """
        Lee todos los registros; el primer error aborta la lectura.

        Returns:
            list: Registros en el orden del archivo
        """
        records = [self.parse_record(n, data, model) for n, data in self.iter_lines()]
        logger.debug(f"Leídos {len(records)} registros de {self.file_path.name}")
        return records

    def read_tolerant(
        self, model: type[RecordT] = TripleRecord
    ) -> tuple[list[RecordT], list[RecordParseError | DimensionMismatch]]:
        """
        Lee los registros aislando los errores por línea.

        Returns:
            tuple: (registros válidos, errores encontrados)

        Raises:
            StorageError: Si el archivo no se puede abrir
        """
        records: list[RecordT] = []
        errors: list[RecordParseError | DimensionMismatch] = []
        for line_number, line in self._raw_lines():
            try:
                data = self.decode_line(line_number, line)
                records.append(self.parse_record(line_number, data, model))
            except (RecordParseError, DimensionMismatch) as e:
                logger.warning(f"⚠️ Registro omitido: {e}")
                errors.append(e)
        logger.info(f"Leídos {len(records)} registros ({len(errors)} omitidos) de {self.file_path.name}")
        return records, errors

    # ========================================================================
    # ESCRITURA
    # ========================================================================

    @staticmethod
    def encode(record: BaseModel) -> str:
        """Serializa un registro a una línea JSON (sin campos None)."""
        return json.dumps(record.model_dump(mode="json", exclude_none=True), ensure_ascii=False)

    def write(self, records: Sequence[BaseModel]) -> None:
        """
        Escribe los registros en orden, uno por línea.

        Args:
            records: Registros a escribir (lista vacía ⇒ archivo vacío)

        Raises:
            StorageError: Si el archivo no se puede escribir
        """
        try:
            self.file_path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.file_path, "w", encoding="utf-8", newline="\n") as f:
                for record in records:
                    f.write(self.encode(record))
                    f.write("\n")
        except OSError as e:
            logger.error(f"Error escribiendo en {self.file_path}: {e}")
            raise StorageError(f"No se puede escribir {self.file_path}: {e}") from e
        logger.debug(f"Escritos {len(records)} registros en {self.file_path.name}")

    def exists(self) -> bool:
        return self.file_path.exists()


# ============================================================================
# FUNCIONES DE CONVENIENCIA
# ============================================================================

def read_triples(path: Path | str) -> list[TripleRecord]:
    """
    Lee un archivo de triples.

    Raises:
        StorageError: Si el archivo no existe
        RecordParseError: Línea malformada (con número de línea)
        DimensionMismatch: Vértices de anchos distintos
    """
    return JSONLinesDatabase(path).read(TripleRecord)


def write_triples(path: Path | str, records: Sequence[TripleRecord]) -> None:
    """
    Escribe registros de triples.

    Raises:
        StorageError: Si el archivo no se puede escribir
    """
    JSONLinesDatabase(path).write(records)


# ============================================================================
# EJEMPLO DE USO
# ============================================================================

if __name__ == "__main__":
    import tempfile

    print("=" * 70)
    print("💾 EJEMPLO DE USO - JSON LINES DATABASE")
    print("=" * 70)

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "triples.jsonl"
        records = [
            TripleRecord(id="rectángulo", vertices=[[0, 0], [1, 0], [0, 1]]),
            TripleRecord(id="tercios", vertices=[[0.1, 1 / 3], [2 / 3, 0.7], [1e-300, 5e300]]),
        ]
        write_triples(path, records)
        print(path.read_text(encoding="utf-8"))
        again = read_triples(path)
        print(f"✅ Round-trip exacto: {again == records}")

    print("=" * 70)

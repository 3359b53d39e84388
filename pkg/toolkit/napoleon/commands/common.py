"""
Piezas compartidas por los subcomandos: códigos de salida y flags comunes.
"""

import argparse
import logging

from napoleon.models.geometry import TransformKind
from napoleon.models.report import BatchSummary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_IO_ERROR = 2


def add_io_arguments(parser: argparse.ArgumentParser, output_help: str = "Archivo .jsonl de salida") -> None:
    parser.add_argument(
        "--input", "-i", default=None,
        help="Archivo .jsonl de entrada (por defecto data/triples.jsonl de NAPOLEON_DATA_DIR)",
    )
    parser.add_argument("--output", "-o", required=True, help=output_help)


def add_tol_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--tol", type=float, default=None,
        help="Tolerancia relativa de colinealidad (por defecto NAPOLEON_COLLINEAR_TOL)",
    )


def kind_argument(value: str) -> TransformKind:
    """Convierte 'inner'/'outer' en TransformKind para argparse."""
    try:
        return TransformKind(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"kind debe ser inner u outer, recibido {value!r}") from None


def non_negative_int(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"se esperaba un entero ≥ 0, recibido {value}")
    return number


def exit_code(*summaries: BatchSummary) -> int:
    """EXIT_IO_ERROR si algún registro fue rechazado; EXIT_OK en otro caso."""
    failed = [item for summary in summaries for item in summary.failed]
    if failed:
        logger.warning(f"⚠️ {len(failed)} registros rechazados")
        return EXIT_IO_ERROR
    return EXIT_OK

"""
Subcomando transform - aplica T± o N± a cada triple de un archivo.
"""

import argparse
import logging
from pathlib import Path

from napoleon.commands.common import add_io_arguments, add_tol_argument, exit_code, kind_argument
from napoleon.models.geometry import TransformKind
from napoleon.services.batch_service import OPERATIONS, BatchService

logger = logging.getLogger(__name__)


# ============================================================================
# DEPENDENCY INJECTION
# ============================================================================

def get_batch_service(tol: float | None = None) -> BatchService:
    """Instancia del servicio de lotes con la tolerancia de la invocación."""
    return BatchService(tol=tol)


# ============================================================================
# COMANDO
# ============================================================================

def cmd_transform(
    input: Path | str,
    output: Path | str,
    kind: TransformKind = TransformKind.INNER,
    op: str = "napoleon",
    tol: float | None = None,
) -> int:
    """
    Aplica la transformación elegida y escribe los resultados.

    Los ids de salida llevan el sufijo ".T+", ".T-", ".N+" o ".N-".

    Returns:
        int: Código de salida (0 éxito, 2 si algún registro fue rechazado)

    Raises:
        StorageError: Si la entrada no se puede leer o la salida escribir
    """
    service = get_batch_service(tol)
    records, loaded = service.load(input)
    results, processed = service.transform(records, kind, op)
    service.save(output, results)
    return exit_code(loaded, processed)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("transform", help="Aplica Torricelli o Napoleon a cada triple")
    add_io_arguments(parser)
    parser.add_argument("--kind", type=kind_argument, default=TransformKind.INNER,
                        help="inner (+) u outer (-)")
    parser.add_argument("--op", choices=OPERATIONS, default="napoleon",
                        help="Transformación a aplicar")
    add_tol_argument(parser)
    parser.set_defaults(handler=lambda args: cmd_transform(args.input, args.output, args.kind, args.op, args.tol))

"""
Subcomando iterate - k-ésima iteración de Napoleon con atajos cerrados.
"""

import argparse
from pathlib import Path

from napoleon.commands.common import add_io_arguments, add_tol_argument, exit_code, kind_argument, non_negative_int
from napoleon.models.geometry import TransformKind
from napoleon.services.batch_service import BatchService


def get_batch_service(tol: float | None = None) -> BatchService:
    return BatchService(tol=tol)


def cmd_iterate(
    input: Path | str,
    output: Path | str,
    kind: TransformKind = TransformKind.INNER,
    k: int = 1,
    tol: float | None = None,
) -> int:
    """
    Aplica N±^k a cada registro (sufijo de id ".N+^k").

    Raises:
        ValueError: Si k < 0
        StorageError: Errores de lectura/escritura
    """
    if k < 0:
        raise ValueError(f"k debe ser no negativo, recibido {k}")
    service = get_batch_service(tol)
    records, loaded = service.load(input)
    results, processed = service.iterate(records, kind, k)
    service.save(output, results)
    return exit_code(loaded, processed)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("iterate", help="Itera la transformación de Napoleon k veces")
    add_io_arguments(parser)
    parser.add_argument("--kind", type=kind_argument, default=TransformKind.INNER)
    parser.add_argument("--k", type=non_negative_int, required=True, help="Número de iteraciones (k ≥ 0)")
    add_tol_argument(parser)
    parser.set_defaults(handler=lambda args: cmd_iterate(args.input, args.output, args.kind, args.k, args.tol))

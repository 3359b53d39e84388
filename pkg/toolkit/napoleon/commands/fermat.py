"""
Subcomando fermat - punto de Fermat–Torricelli de cada triple.
"""

import argparse
from pathlib import Path

from napoleon.commands.common import add_io_arguments, add_tol_argument, exit_code
from napoleon.services.batch_service import BatchService


def get_batch_service(tol: float | None = None) -> BatchService:
    return BatchService(tol=tol)


def cmd_fermat(input: Path | str, output: Path | str, with_oracle: bool = False, tol: float | None = None) -> int:
    """
    Escribe el punto de Fermat, la regla que lo determinó y la suma de distancias.

    Con with_oracle añade el punto de Weiszfeld y la distancia entre ambos.
    Los triples triviales se rechazan y el código de salida es 2.
    """
    service = get_batch_service(tol)
    records, loaded = service.load(input)
    results, processed = service.fermat(records, with_oracle)
    service.save(output, results)
    return exit_code(loaded, processed)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("fermat", help="Punto de Fermat de cada triple")
    add_io_arguments(parser)
    parser.add_argument("--with-oracle", action="store_true", help="Compara con el algoritmo de Weiszfeld")
    add_tol_argument(parser)
    parser.set_defaults(handler=lambda args: cmd_fermat(args.input, args.output, args.with_oracle, args.tol))

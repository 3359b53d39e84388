"""
Subcomando align - triángulo equilátero óptimamente alineado con cada triple.
"""

import argparse
import logging
from pathlib import Path

from napoleon.commands.common import add_io_arguments, add_tol_argument, exit_code
from napoleon.services.batch_service import BatchService

logger = logging.getLogger(__name__)


# ============================================================================
# DEPENDENCY INJECTION
# ============================================================================

def get_batch_service(tol: float | None = None) -> BatchService:
    return BatchService(tol=tol)


# ============================================================================
# COMANDO
# ============================================================================

def cmd_align(
    input: Path | str,
    output: Path | str,
    with_oracle: bool = False,
    tol: float | None = None,
    grid_n: int | None = None,
    refine_iters: int | None = None,
) -> int:
    """
    Emite por registro el triple alineado, el objetivo y la bandera de unicidad.

    Con with_oracle también ejecuta el oráculo numérico y emite la brecha.

    Returns:
        int: Código de salida (0 éxito, 2 si algún registro fue rechazado)
    """
    service = get_batch_service(tol)
    records, loaded = service.load(input)
    results, processed = service.align(records, with_oracle, grid_n, refine_iters)
    if with_oracle and results:
        worst = max(abs(r.oracle_gap) for r in results)
        logger.info(f"🎯 Mayor |brecha| del oráculo: {worst:.3e}")
    service.save(output, results)
    return exit_code(loaded, processed)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("align", help="Alineación equilátera óptima")
    add_io_arguments(parser)
    parser.add_argument("--with-oracle", action="store_true", help="Compara con el oráculo numérico")
    parser.add_argument("--grid-n", type=int, default=None, help="Puntos de la grilla en θ (≥ 32)")
    parser.add_argument("--refine-iters", type=int, default=None, help="Iteraciones de sección áurea")
    add_tol_argument(parser)
    parser.set_defaults(handler=lambda args: cmd_align(
        args.input, args.output, args.with_oracle, args.tol, args.grid_n, args.refine_iters
    ))

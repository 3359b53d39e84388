"""
Napoleon Toolkit - CLI
======================
Transformaciones de Torricelli y Napoleon en R^d, alineación equilátera
óptima, punto de Fermat, verificación de invariantes y dibujo en SVG.
Punto de entrada principal de la línea de comandos.
"""

import argparse
import logging
import sys
from typing import Sequence

from napoleon.commands import SUBCOMMANDS
from napoleon.commands.common import EXIT_IO_ERROR
from napoleon.config import get_settings
from napoleon.exceptions import NapoleonError

logger = logging.getLogger(__name__)


# ============================================================================
# CONFIGURACIÓN DE LOGGING
# ============================================================================

def configure_logging(verbose: bool = False) -> None:
    """Configura logging; --verbose fuerza DEBUG."""
    level = logging.DEBUG if verbose else getattr(logging, get_settings().log_level(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        force=True,
    )


# ============================================================================
# PARSER
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="napoleon",
        description=f"{settings.APP_NAME}: Torricelli, Napoleon y alineación equilátera en R^d",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Logging a nivel DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in SUBCOMMANDS:
        module.register(subparsers)
    return parser


# ============================================================================
# MAIN
# ============================================================================

def main(argv: Sequence[str] | None = None) -> int:
    """
    Ejecuta el subcomando pedido.

    Returns:
        int: 0 éxito, 1 verificación fallida, 2 error de E/S o de lectura
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    logger.debug(f"Comando: {args.command}")
    if getattr(args, "input", "") is None:
        args.input = get_settings().SAMPLE_TRIPLES_FILE
        logger.info(f"Entrada por defecto: {args.input}")

    try:
        return args.handler(args)
    except NapoleonError as e:
        logger.error(f"❌ {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO_ERROR
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO_ERROR


if __name__ == "__main__":
    sys.exit(main())

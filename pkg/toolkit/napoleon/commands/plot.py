"""
Subcomando plot - dibuja los triples y sus construcciones en un SVG.
"""

import argparse
from pathlib import Path
from typing import Sequence

from napoleon.commands.common import EXIT_IO_ERROR, EXIT_OK, add_io_arguments, add_tol_argument
from napoleon.config import get_settings
from napoleon.database.jsonl_db import JSONLinesDatabase
from napoleon.models.records import TripleRecord
from napoleon.rendering.svg import parse_show, render_records


def cmd_plot(
    input: Path | str,
    output_svg: Path | str,
    show: str | Sequence[str] = (),
    tol: float | None = None,
) -> int:
    """
    Escribe un SVG con el triángulo original, las construcciones elegidas,
    el centroide y las etiquetas de los vértices.

    Los triples triviales se omiten con una advertencia; eso no cambia el
    código de salida. Las líneas inválidas de la entrada sí (código 2).
    """
    show = parse_show(show)
    tol = get_settings().COLLINEAR_TOL if tol is None else tol
    records, errors = JSONLinesDatabase(input).read_tolerant(TripleRecord)
    scene, _ = render_records(records, show, tol)
    scene.write(output_svg)
    return EXIT_IO_ERROR if errors else EXIT_OK


def _show_argument(value: str) -> list[str]:
    try:
        return parse_show(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("plot", help="Dibuja las construcciones en SVG")
    add_io_arguments(parser, output_help="Archivo .svg de salida")
    parser.add_argument(
        "--show", type=_show_argument, default=[],
        help="Lista separada por comas: torricelli+, torricelli-, napoleon+, napoleon-, double, fermat "
             "(también torricelli± / napoleon±)",
    )
    add_tol_argument(parser)
    parser.set_defaults(handler=lambda args: cmd_plot(args.input, args.output, args.show, args.tol))

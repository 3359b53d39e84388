"""
Subcomando verify - ejecuta el conjunto de invariantes y escribe el reporte.
"""

import argparse
import logging
from pathlib import Path

from napoleon.commands.common import EXIT_OK, EXIT_VERIFICATION_FAILED
from napoleon.config import Settings, get_settings
from napoleon.models.report import VerificationReport
from napoleon.services.verification_service import VerificationService

logger = logging.getLogger(__name__)


# ============================================================================
# DEPENDENCY INJECTION
# ============================================================================

def get_verification_service(n: int, dimension: int, seed: int, settings: Settings | None = None) -> VerificationService:
    return VerificationService(n=n, dimension=dimension, seed=seed, settings=settings)


# ============================================================================
# COMANDO
# ============================================================================

def cmd_verify(
    n: int,
    d: int,
    seed: int,
    report_path: Path | str | None = None,
    settings: Settings | None = None,
) -> tuple[VerificationReport, int]:
    """
    Genera n triples (más los casos borde), verifica y escribe el reporte.

    Args:
        n: Triples aleatorios (n ≥ 1)
        d: Dimensión (d ≥ 2)
        seed: Semilla
        report_path: Destino del reporte JSON (por defecto reports/verification.json)

    Returns:
        tuple: (reporte, código de salida: 0 si todo pasa, 1 si algo falla)

    Raises:
        ValueError: Si n < 1 o d < 2
        StorageError: Si el reporte no se puede escribir
    """
    settings = settings or get_settings()
    service = get_verification_service(n, d, seed, settings)
    report = service.run()
    service.write_report(report, report_path or settings.DEFAULT_REPORT_FILE)
    return report, EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def _run(args: argparse.Namespace) -> int:
    settings = get_settings()
    report, code = cmd_verify(
        args.n if args.n is not None else settings.VERIFY_N,
        args.dim if args.dim is not None else settings.VERIFY_DIM,
        args.seed if args.seed is not None else settings.VERIFY_SEED,
        args.output,
        settings,
    )
    for name, check in report.checks.items():
        status = "OK  " if check.ok else "FAIL"
        print(f"{status} {name:<32} {check.passed}/{check.checked}  max={check.max_residual:.3e}")
    return code


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="Verifica los invariantes sobre triples aleatorios")
    parser.add_argument("--n", type=int, default=None, help="Triples aleatorios (por defecto NAPOLEON_VERIFY_N)")
    parser.add_argument("--dim", type=int, default=None, help="Dimensión d ≥ 2")
    parser.add_argument("--seed", type=int, default=None, help="Semilla del generador")
    parser.add_argument("--output", "-o", default=None, help="Archivo JSON del reporte")
    parser.set_defaults(handler=_run)

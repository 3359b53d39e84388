"""
Módulo de Servicios - lógica de procesamiento por lotes y verificación.
"""

from napoleon.services.batch_service import BatchService
from napoleon.services.verification_service import VerificationService

__all__ = [
    'BatchService',
    'VerificationService',
]

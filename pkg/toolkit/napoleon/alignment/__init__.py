"""
Módulo de Alineación - forma cerrada, certificado KKT y oráculos numéricos.
"""

from napoleon.alignment.closed_form import (
    alignment_objective,
    branch_alignment,
    optimal_equilateral_alignment,
)
from napoleon.alignment.kkt import kkt_residual
from napoleon.alignment.oracle import golden_section, oracle_alignment
from napoleon.alignment.planar import (
    hessian_min_eigenvalue,
    planar_branch_solution,
    planar_parametrization,
)
from napoleon.alignment.weiszfeld import weiszfeld

__all__ = [
    'alignment_objective',
    'branch_alignment',
    'optimal_equilateral_alignment',
    'kkt_residual',
    'golden_section',
    'oracle_alignment',
    'hessian_min_eigenvalue',
    'planar_branch_solution',
    'planar_parametrization',
    'weiszfeld',
]

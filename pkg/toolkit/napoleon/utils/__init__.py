"""
Utilidades auxiliares - generación de triples aleatorios.
"""

from napoleon.utils.sampling import (
    collinear_triple,
    edge_cases,
    near_collinear_triple,
    random_equilateral,
    random_rotation,
    random_triple,
    trivial_triple,
)

__all__ = [
    'collinear_triple',
    'edge_cases',
    'near_collinear_triple',
    'random_equilateral',
    'random_rotation',
    'random_triple',
    'trivial_triple',
]

"""
Módulo de Geometría - marcos, operadores y transformaciones en R^d.
"""

from napoleon.geometry.predicates import (
    equilaterality_residual,
    is_collinear,
    is_equilateral,
    is_trivial,
)
from napoleon.geometry.frames import (
    plane_frame,
    project_to_plane,
    rotation_operator,
    structure_operators,
)
from napoleon.geometry.transforms import (
    centroid,
    compose_napoleon,
    double_outer_napoleon,
    erected_vertex,
    napoleon,
    napoleon_iter,
    torricelli,
    torricelli_displacement,
)
from napoleon.geometry.fermat import fermat_point, locate_fermat_point

__all__ = [
    'equilaterality_residual',
    'is_collinear',
    'is_equilateral',
    'is_trivial',
    'plane_frame',
    'project_to_plane',
    'rotation_operator',
    'structure_operators',
    'centroid',
    'compose_napoleon',
    'double_outer_napoleon',
    'erected_vertex',
    'napoleon',
    'napoleon_iter',
    'torricelli',
    'torricelli_displacement',
    'fermat_point',
    'locate_fermat_point',
]

"""
Módulo de Renderizado - escenas SVG de las construcciones.
"""

from napoleon.rendering.svg import Scene, parse_show, record_items, render_records

__all__ = [
    'Scene',
    'parse_show',
    'record_items',
    'render_records',
]

"""
Napoleon Toolkit - transformaciones de Torricelli y Napoleon en R^d y
alineación equilátera óptima.
"""

__version__ = '1.0.0'

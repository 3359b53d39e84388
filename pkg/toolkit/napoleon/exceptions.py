"""
Jerarquía de errores de Napoleon Toolkit.
"""


class NapoleonError(Exception):
    """Error base del paquete."""


class TrivialTriple(NapoleonError):
    """Los tres vértices coinciden: no existe plano ni punto de Fermat definido."""


class DimensionMismatch(NapoleonError, ValueError):
    """Puntos u operadores de dimensiones incompatibles (o d < 2)."""


class NotEquilateral(NapoleonError, ValueError):
    """Se esperaba un triple equilátero."""

    def __init__(self, residual: float, tol: float):
        self.residual = residual
        self.tol = tol
        super().__init__(f"Triple no equilátero: residuo {residual:.3e} > {tol:.1e}")


class NoConvergence(NapoleonError):
    """Un método iterativo agotó sus iteraciones."""

    def __init__(self, iterations: int, last_step: float):
        self.iterations = iterations
        self.last_step = last_step
        super().__init__(
            f"Sin convergencia tras {iterations} iteraciones (último paso {last_step:.3e})"
        )


class RecordParseError(NapoleonError, ValueError):
    """Línea malformada en un archivo de triples."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"Línea {line_number}: {message}")


class StorageError(NapoleonError, OSError):
    """Error de lectura/escritura de archivos."""

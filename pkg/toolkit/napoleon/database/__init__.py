"""
Módulo de persistencia - archivos JSON Lines de triples y resultados.
"""

from napoleon.database.jsonl_db import JSONLinesDatabase, read_triples, write_triples

__all__ = [
    'JSONLinesDatabase',
    'read_triples',
    'write_triples',
]

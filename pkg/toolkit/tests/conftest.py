"""Fixtures compartidas por las pruebas."""

import math

import numpy as np
import pytest

from napoleon.config import Settings
from napoleon.database.jsonl_db import write_triples
from napoleon.models.geometry import Triple
from napoleon.models.records import TripleRecord

SQRT3 = math.sqrt(3.0)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def right_triangle() -> Triple:
    return Triple.of((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))


@pytest.fixture
def unit_equilateral() -> Triple:
    return Triple.of((0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2.0))


@pytest.fixture
def collinear() -> Triple:
    return Triple.of((0.0, 0.0), (1.0, 0.0), (2.0, 0.0))


@pytest.fixture
def obtuse() -> Triple:
    """Ángulo de ~157° en el tercer vértice."""
    return Triple.of((-1.0, 0.0), (1.0, 0.0), (0.0, 0.2))


@pytest.fixture
def trivial() -> Triple:
    return Triple.of((2.0, 3.0), (2.0, 3.0), (2.0, 3.0))


@pytest.fixture
def settings(tmp_path) -> Settings:
    return Settings(DATA_DIR=str(tmp_path / "data"), REPORTS_DIR=str(tmp_path / "reports"))


@pytest.fixture
def triples_file(tmp_path, right_triangle, unit_equilateral, collinear, obtuse):
    """Archivo .jsonl con cuatro triples planos."""
    path = tmp_path / "triples.jsonl"
    records = [
        TripleRecord.from_triple("right", right_triangle),
        TripleRecord.from_triple("equilateral", unit_equilateral, tags=["regular"]),
        TripleRecord.from_triple("collinear", collinear),
        TripleRecord.from_triple("obtuse", obtuse),
    ]
    write_triples(path, records)
    return path

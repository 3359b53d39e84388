"""Estrategias de hypothesis para generar triples."""

import numpy as np
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from napoleon.geometry.transforms import equilateral_from_parameters
from napoleon.models.geometry import Triple
from napoleon.utils.sampling import random_orthonormal_pair

MIN_SCALE = 1e-3

coordinates = st.floats(
    min_value=-10.0,
    max_value=10.0,
    allow_nan=False,
    allow_infinity=False,
    allow_subnormal=False,
)


def triples(dimension: int = 2) -> st.SearchStrategy[Triple]:
    """Triples arbitrarios (incluye colineales y triviales)."""
    return arrays(np.float64, (3, dimension), elements=coordinates).map(Triple.from_array)


def well_scaled_triples(dimensions: tuple[int, ...] = (2, 3, 5)) -> st.SearchStrategy[Triple]:
    """Triples de escala ≥ MIN_SCALE en alguna de las dimensiones dadas."""
    return (
        st.sampled_from(dimensions)
        .flatmap(triples)
        .filter(lambda x: x.scale >= MIN_SCALE)
    )


@st.composite
def equilateral_triples(draw, dimensions: tuple[int, ...] = (2, 3, 5)) -> Triple:
    """Equiláteros de centro, giro, radio, orientación y plano arbitrarios."""
    dimension = draw(st.sampled_from(dimensions))
    center = draw(arrays(np.float64, dimension, elements=coordinates))
    theta = draw(st.floats(min_value=0.0, max_value=2.0 * np.pi))
    radius = draw(st.floats(min_value=0.1, max_value=10.0))
    k = draw(st.sampled_from((1, -1)))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    basis = random_orthonormal_pair(np.random.default_rng(seed), dimension)
    return equilateral_from_parameters(center, theta, radius, k, basis)


def planar_rotations() -> st.SearchStrategy[np.ndarray]:
    return st.floats(min_value=0.0, max_value=2.0 * np.pi).map(
        lambda a: np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]])
    )

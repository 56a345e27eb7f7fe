"""Shared fixtures: seeded randomness and random-state factories."""

from __future__ import annotations

import numpy as np
import pytest

from discordsim import DensityMatrix

SEED = 20260818


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


def random_density(rng: np.random.Generator, dim: int) -> DensityMatrix:
    """Full-rank random state: normalized G G† with complex Gaussian G."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ g.conj().T
    return DensityMatrix(m / m.trace().real)


def random_pure(rng: np.random.Generator, dim: int = 4) -> DensityMatrix:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    v /= np.linalg.norm(v)
    return DensityMatrix(np.outer(v, v.conj()))


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


@pytest.fixture
def make_density():
    return random_density


@pytest.fixture
def make_pure():
    return random_pure


@pytest.fixture
def make_unitary():
    return random_unitary

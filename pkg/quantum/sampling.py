"""
Seeded random instances for property checks and Monte Carlo demos.

Every function takes a numpy Generator so callers control reproducibility.
"""
import numpy as np

from . import cmatrix
from .qstate import DensityOperator, Ensemble, Observable, PureState


def rng_for(seed):
    return np.random.default_rng(seed)


def random_hermitian(rng, dim, scale=1.0):
    raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (raw + raw.conj().T) / 2


def random_observable(rng, dim, dims=None):
    return Observable(random_hermitian(rng, dim), dims)


def random_unitary(rng, dim):
    """exp(-i H) for a random Hermitian H"""
    return cmatrix.mat_exp_unitary(random_hermitian(rng, dim), 1.0)


def random_pure_state(rng, dim, dims=None):
    amplitudes = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return PureState.from_amplitudes(amplitudes, dims)


def random_distribution(rng, size, floor=0.0):
    """Dirichlet(1, ..., 1) draw; `floor` mixes in the uniform distribution"""
    p = rng.dirichlet(np.ones(size))
    return (1 - floor) * p + floor / size


def random_density(rng, dim, rank=None, dims=None, floor=0.0):
    """
    Mixture of `rank` random pure states (full rank by default)

    A positive floor mixes in the maximally mixed state, keeping every eigenvalue
    at least floor / dim.
    """
    rank = rank or dim
    weights = random_distribution(rng, rank)
    matrix = sum(w * cmatrix.projector(random_pure_state(rng, dim).vector) for w in weights)
    matrix = (1 - floor) * matrix + floor * np.eye(dim) / dim
    return DensityOperator((matrix + matrix.conj().T) / 2, dims)


def random_ensemble(rng, members, dim, mixed=False):
    weights = random_distribution(rng, members)
    states = [random_density(rng, dim) if mixed else random_pure_state(rng, dim) for _ in range(members)]
    return Ensemble(tuple(zip(weights, states)))


def random_projective_basis(rng, dim):
    """Rank-one projectors onto the columns of a random unitary"""
    unitary = random_unitary(rng, dim)
    return [cmatrix.projector(unitary[:, j]) for j in range(dim)]

"""
States, ensembles, observables, measurement statistics and Schroedinger evolution.
"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from . import cmatrix
from .exceptions import ContractError, NumericalError, ShapeError

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-9
IMAGINARY_RESIDUE_LIMIT = 1e-6


def _frozen(array):
    array = np.array(array, dtype=np.complex128)
    array.setflags(write=False)
    return array


def _dims_for(side, dims):
    if dims is None:
        return (side,)
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims) or math.prod(dims) != side:
        raise ShapeError(f"Subsystem dimensions {list(dims)} do not multiply to {side}")
    return dims


@dataclass(frozen=True, eq=False)
class PureState:
    vector: np.ndarray
    dims: tuple = None

    def __post_init__(self):
        vector = cmatrix.as_vector(self.vector)
        object.__setattr__(self, 'vector', _frozen(vector))
        object.__setattr__(self, 'dims', _dims_for(vector.size, self.dims))
        norm = float(np.vdot(vector, vector).real)
        if abs(norm - 1) > NORM_TOLERANCE:
            raise ContractError(f"State vector must have unit norm (squared norm {norm:.12g})")

    @classmethod
    def from_amplitudes(cls, amplitudes, dims=None):
        """Normalize raw amplitudes into a state"""
        vector = cmatrix.as_vector(amplitudes)
        norm = np.linalg.norm(vector)
        if norm == 0:
            raise ContractError("Cannot normalize the zero vector")
        return cls(vector / norm, dims)

    @property
    def dim(self):
        return self.vector.size

    def density(self):
        return DensityOperator(cmatrix.projector(self.vector), self.dims)


@dataclass(frozen=True, eq=False)
class DensityOperator:
    matrix: np.ndarray
    dims: tuple = None

    def __post_init__(self):
        matrix = cmatrix.as_matrix(self.matrix)
        if matrix.shape[0] != matrix.shape[1]:
            raise ShapeError(f"Density operator must be square, got {matrix.shape}")
        object.__setattr__(self, 'dims', _dims_for(matrix.shape[0], self.dims))
        if not cmatrix.is_density(matrix, NORM_TOLERANCE):
            raise ContractError("Matrix is not a density operator (Hermitian, unit trace, positive semidefinite)")
        # keep only the Hermitian part so spectral routines see an exactly Hermitian matrix
        object.__setattr__(self, 'matrix', _frozen((matrix + matrix.conj().T) / 2))

    @property
    def dim(self):
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class Observable:
    matrix: np.ndarray
    dims: tuple = None

    def __post_init__(self):
        matrix = cmatrix.as_matrix(self.matrix)
        if matrix.shape[0] != matrix.shape[1]:
            raise ShapeError(f"Observable must be square, got {matrix.shape}")
        object.__setattr__(self, 'dims', _dims_for(matrix.shape[0], self.dims))
        if not cmatrix.is_hermitian(matrix, NORM_TOLERANCE):
            raise ContractError("Observable must be Hermitian")
        object.__setattr__(self, 'matrix', _frozen((matrix + matrix.conj().T) / 2))

    @property
    def dim(self):
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Preparation procedure: (probability, PureState or DensityOperator) pairs"""
    items: tuple = field(default_factory=tuple)

    def __post_init__(self):
        items = tuple((float(p), state) for p, state in self.items)
        object.__setattr__(self, 'items', items)
        if not items:
            raise ContractError("Ensemble needs at least one member")
        if any(p < 0 for p, _ in items):
            raise ContractError("Ensemble probabilities must be nonnegative")
        total = sum(p for p, _ in items)
        if abs(total - 1) > NORM_TOLERANCE:
            raise ContractError(f"probabilities sum to {total:.12g}")
        dims = {state.dims for _, state in items}
        if len(dims) != 1:
            raise ShapeError(f"Ensemble members have different dimensions: {sorted(dims)}")

    @property
    def dims(self):
        return self.items[0][1].dims

    @property
    def weights(self):
        return [p for p, _ in self.items]

    @property
    def states(self):
        return [state for _, state in self.items]


def density_matrix(state):
    """Matrix of a PureState (its projector) or a DensityOperator"""
    if isinstance(state, PureState):
        return cmatrix.projector(state.vector)
    if isinstance(state, DensityOperator):
        return np.array(state.matrix)
    raise ContractError(f"Expected a PureState or DensityOperator, got {type(state).__name__}")


def basis_state(bits, dims=None):
    """
    Computational basis ket

    Args:
        bits: digits per subsystem, e.g. [1, 0] for |1>|0> or the string '10'
        dims: subsystem dimensions (qubits by default)

    Returns:
        PureState
    """
    digits = [int(b) for b in bits]
    dims = tuple(dims) if dims is not None else (2,) * len(digits)
    if len(dims) != len(digits) or any(not 0 <= d < size for d, size in zip(digits, dims)):
        raise ShapeError(f"Digits {digits} do not fit subsystem dimensions {list(dims)}")
    index = 0
    for digit, size in zip(digits, dims):
        index = index * size + digit
    vector = np.zeros(math.prod(dims), dtype=np.complex128)
    vector[index] = 1
    return PureState(vector, dims)


def density_from_ensemble(ensemble):
    """rho = sum_i p_i |psi_i><psi_i| (or p_i rho_i for mixed members)"""
    matrix = sum(p * density_matrix(state) for p, state in ensemble.items)
    return DensityOperator(matrix, ensemble.dims)


def _check_dims(first, second):
    if first.dims != second.dims:
        raise ShapeError(f"Dimension mismatch: {list(first.dims)} vs {list(second.dims)}")


def expectation(observable, rho):
    """<A> = tr(A rho)"""
    _check_dims(observable, rho)
    value = np.trace(observable.matrix @ rho.matrix)
    if abs(value.imag) > IMAGINARY_RESIDUE_LIMIT:
        raise NumericalError(f"Expectation value has imaginary residue {value.imag:.3e}")
    if abs(value.imag) > NORM_TOLERANCE:
        logger.warning(f"Discarding imaginary residue {value.imag:.3e} of an expectation value")
    return float(value.real)


def _clamp_probability(value, what):
    if value < -NORM_TOLERANCE or value > 1 + NORM_TOLERANCE:
        raise NumericalError(f"{what} {value:.12g} outside [0, 1]")
    return min(max(value, 0.0), 1.0)


def measure_prob(rho, proj):
    """
    Probability tr(P rho) of the outcome associated with a projector

    The residue check allows [-1e-9, 1 + 1e-9] before clamping to [0, 1].
    """
    proj = cmatrix.as_matrix(proj)
    if proj.shape != rho.matrix.shape:
        raise ShapeError(f"Projector shape {proj.shape} does not match state {rho.matrix.shape}")
    if not cmatrix.is_hermitian(proj) or cmatrix.max_deviation(proj @ proj, proj) > NORM_TOLERANCE:
        raise ContractError("Measurement operator is not a projector (Hermitian and idempotent)")
    value = np.trace(proj @ rho.matrix)
    if abs(value.imag) > IMAGINARY_RESIDUE_LIMIT:
        raise NumericalError(f"Probability has imaginary residue {value.imag:.3e}")
    return _clamp_probability(float(value.real), 'Probability')


def measurement_distribution(rho, projectors):
    """Outcome probabilities of a complete projective measurement"""
    projectors = [cmatrix.as_matrix(p) for p in projectors]
    completeness = sum(projectors)
    if cmatrix.max_deviation(completeness, np.eye(rho.dim)) > NORM_TOLERANCE:
        raise ContractError("Projectors do not sum to the identity")
    return [measure_prob(rho, p) for p in projectors]


def evolve(psi, hamiltonian, t, hbar=1.0):
    """|psi(t)> = exp(-i H t / hbar) |psi>"""
    _check_dims(psi, hamiltonian)
    unitary = cmatrix.mat_exp_unitary(hamiltonian.matrix, t, hbar)
    return PureState(unitary @ psi.vector, psi.dims)


def purity(rho):
    """tr(rho^2): 1 for pure states, 1/d for the maximally mixed state"""
    return float(np.trace(rho.matrix @ rho.matrix).real)


def reduced(rho, keep):
    """Reduced density operator on the kept subsystems"""
    keep = sorted(set(keep))
    matrix = cmatrix.partial_trace(rho.matrix, rho.dims, keep)
    return DensityOperator(matrix, [rho.dims[k] for k in keep] or None)


def schmidt_rank(psi, tolerance=NORM_TOLERANCE):
    """Number of nonzero eigenvalues of tr_B |psi><psi| for a bipartite pure state"""
    if len(psi.dims) != 2:
        raise ShapeError(f"Schmidt rank needs exactly two subsystems, got dims {list(psi.dims)}")
    rho_a = cmatrix.partial_trace(cmatrix.projector(psi.vector), psi.dims, [0])
    values, _ = cmatrix.hermitian_eig(rho_a)
    return int(np.sum(values > tolerance))


def is_product(psi, tolerance=NORM_TOLERANCE):
    return schmidt_rank(psi, tolerance) == 1

"""
Entanglement: classical versus quantum correlations, entangling evolution, the
no-cloning entropy argument and Procrustean distillation of a single pair.

Two-qubit registers are ordered (A, B); the distillation register is
(ancilla, A, B) with the ancilla on Alice's side and most significant.
"""
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import cmatrix
from .entropy import shannon, von_neumann
from .exceptions import ContractError, NumericalError, ResourceError, ShapeError
from .qstate import DensityOperator, Observable, PureState, basis_state, evolve, measure_prob, reduced, schmidt_rank

logger = logging.getLogger(__name__)

AMPLITUDE_TOLERANCE = 1e-9
MAX_FULL_CLONES = 10
MAX_GRAM_CLONES = 60
AUTO_FULL_CLONES = 6
BRANCH_CUTOFF = 1e-15

UP = np.array([1, 0], dtype=np.complex128)
DIAGONAL = np.array([1, 1], dtype=np.complex128) / math.sqrt(2)


@dataclass(frozen=True)
class PolarizationBasis:
    """
    Polarizer turned by `angle` radians from the H/V axes

    |X> = cos(angle) |H> + sin(angle) |V>,  |Y> = -sin(angle) |H> + cos(angle) |V>
    """
    angle: float = math.pi / 4

    @classmethod
    def from_degrees(cls, degrees):
        return cls(math.radians(degrees))

    @property
    def states(self):
        c, s = math.cos(self.angle), math.sin(self.angle)
        return np.array([c, s], dtype=np.complex128), np.array([-s, c], dtype=np.complex128)

    @property
    def projectors(self):
        x, y = self.states
        return cmatrix.projector(x), cmatrix.projector(y)


@dataclass(frozen=True)
class DistillationOutcome:
    success: bool
    probability: float
    post_state: PureState


class EntanglingRun(NamedTuple):
    initial: PureState
    final: PureState
    schmidt_rank_final: int


class SchmidtForm(NamedTuple):
    alpha: float
    beta: float


class SamplingSummary(NamedTuple):
    successes: int
    trials: int
    rate: float


def classically_correlated_state():
    """1/2 |HH><HH| + 1/2 |VV><VV|"""
    hh = cmatrix.projector(basis_state('00').vector)
    vv = cmatrix.projector(basis_state('11').vector)
    return DensityOperator((hh + vv) / 2, (2, 2))


def maximally_correlated_state():
    """(|HH> + |VV>) / sqrt(2)"""
    return PureState.from_amplitudes([1, 0, 0, 1], (2, 2))


def _as_two_qubit_density(state):
    if isinstance(state, PureState):
        state = state.density()
    if state.dim != 4:
        raise ShapeError(f"Expected a two-qubit state, got dimension {state.dim}")
    return state


def anticorrelation_probs(state, basis):
    """
    Probabilities of finding the beams in (X, Y) and in (Y, X)

    Returns:
        tuple: (p_xy, p_yx) with p_xy = tr((P_X (x) P_Y) rho)
    """
    rho = _as_two_qubit_density(state)
    p_x, p_y = basis.projectors
    p_xy = measure_prob(rho, cmatrix.tensor(p_x, p_y))
    p_yx = measure_prob(rho, cmatrix.tensor(p_y, p_x))
    return p_xy, p_yx


def entangling_demo(hbar=1.0):
    """
    Evolve |psi_0> = (|0> + |1>)(|0> + |1>) / 2 under H = diag(1, 1, 1, -1) for t = pi hbar / 2

    The result (-i/2)(1, 1, 1, -1) has Schmidt rank 2.
    """
    initial = PureState.from_amplitudes([1, 1, 1, 1], (2, 2))
    hamiltonian = Observable(np.diag([1, 1, 1, -1]), (2, 2))
    final = evolve(initial, hamiltonian, math.pi * hbar / 2, hbar)
    return EntanglingRun(initial=initial, final=final, schmidt_rank_final=schmidt_rank(final))


def gram_entropy(weights, states):
    """
    von Neumann entropy of sum_i w_i |psi_i><psi_i| from the weighted Gram matrix

    G_ij = sqrt(w_i w_j) <psi_i|psi_j> shares its nonzero spectrum with the mixture,
    so only a len(states)-sided matrix is diagonalized.
    """
    weights = np.asarray(weights, dtype=float)
    vectors = [np.asarray(getattr(s, 'vector', s), dtype=np.complex128) for s in states]
    if weights.size != len(vectors):
        raise ShapeError("Need one weight per state")
    roots = np.sqrt(weights)
    gram = np.array([[np.vdot(a, b) for b in vectors] for a in vectors])
    return _overlap_spectrum_entropy(np.outer(roots, roots) * gram)


def _overlap_spectrum_entropy(gram):
    values, _ = cmatrix.hermitian_eig(gram)
    values = np.clip(values, 0.0, None)
    return shannon(values / values.sum())


def _clones_full(k):
    up = cmatrix.tensor_all(*([UP] * k))
    diagonal = cmatrix.tensor_all(*([DIAGONAL] * k))
    rho = DensityOperator((cmatrix.projector(up) + cmatrix.projector(diagonal)) / 2, (2,) * k)
    return von_neumann(rho)


def _clones_gram(k):
    # <up|diag>^k = 2^(-k/2); the mixture only sees this overlap
    overlap = 2.0 ** (-k / 2)
    gram = np.array([[0.5, 0.5 * overlap], [0.5 * overlap, 0.5]], dtype=np.complex128)
    return _overlap_spectrum_entropy(gram)


def no_cloning_demo(k, method='auto'):
    """
    Entropy of the equal mixture of |up>^k and ((|up> + |down>)/sqrt(2))^k

    Cloning the signal states would raise the source's information content:
    0.6008 bits for one copy, 0.8113 for two, tending to 1.

    Args:
        k: number of copies
        method: 'full' diagonalizes the 2^k-sided density matrix (k <= 10), 'gram'
            uses the 2x2 overlap matrix (k <= 60), 'auto' picks full for small k
    """
    if k < 1:
        raise ContractError(f"Need at least one copy, got {k}")
    if method == 'auto':
        method = 'full' if k <= AUTO_FULL_CLONES else 'gram'
    if method == 'full':
        if k > MAX_FULL_CLONES:
            raise ResourceError(f"{k} copies exceed the {MAX_FULL_CLONES}-copy guard for full matrices")
        return _clones_full(k)
    if method == 'gram':
        if k > MAX_GRAM_CLONES:
            raise ResourceError(f"{k} copies exceed the {MAX_GRAM_CLONES}-copy guard")
        return _clones_gram(k)
    raise ContractError(f"Unknown method {method!r}")


def _check_amplitudes(alpha, beta):
    if isinstance(alpha, complex) or isinstance(beta, complex):
        raise ContractError("Distillation amplitudes must be real; use real_schmidt_form first")
    alpha, beta = float(alpha), float(beta)
    if not beta > 0:
        raise ContractError(f"beta must be positive, got {beta}")
    if beta > alpha:
        raise ContractError(f"Protocol needs alpha >= beta, got alpha={alpha}, beta={beta}")
    if abs(alpha ** 2 + beta ** 2 - 1) > AMPLITUDE_TOLERANCE:
        raise ContractError(f"alpha^2 + beta^2 = {alpha ** 2 + beta ** 2:.12g}, expected 1")
    return alpha, beta


def unitary_filter(alpha, beta):
    """Alice's two-particle unitary that moves the excess |00> amplitude onto the ancilla"""
    alpha, beta = _check_amplitudes(alpha, beta)
    ratio = beta / alpha
    leak = math.sqrt(max(alpha ** 2 - beta ** 2, 0.0)) / alpha
    return np.array([
        [ratio, 0, -leak, 0],
        [0, 1, 0, 0],
        [leak, 0, ratio, 0],
        [0, 0, 0, 1],
    ], dtype=np.complex128)


def _branch(block, success):
    probability = float(np.vdot(block, block).real)
    if probability < BRANCH_CUTOFF:
        return DistillationOutcome(success, 0.0, basis_state('00'))
    return DistillationOutcome(success, probability, PureState(block / math.sqrt(probability), (2, 2)))


def procrustean_distill(alpha, beta):
    """
    Single-pair Procrustean distillation of alpha|00> + beta|11>

    Alice adds an ancilla in |0>, applies unitary_filter to (ancilla, A) and measures
    the ancilla. Outcome 0 (probability 2 beta^2) leaves the pair maximally entangled;
    outcome 1 leaves the product |00>.

    Returns:
        tuple: (success, failure) DistillationOutcome pair
    """
    alpha, beta = _check_amplitudes(alpha, beta)
    pair = np.array([alpha, 0, 0, beta], dtype=np.complex128)
    total = cmatrix.tensor(UP, pair)
    transformed = cmatrix.tensor(unitary_filter(alpha, beta), np.eye(2)) @ total
    success = _branch(transformed[:4], True)
    failure = _branch(transformed[4:], False)
    if abs(success.probability + failure.probability - 1) > AMPLITUDE_TOLERANCE:
        raise NumericalError("Distillation branch probabilities do not sum to 1")
    logger.debug(f"Distillation alpha={alpha:.6g} beta={beta:.6g}: success probability {success.probability:.12g}")
    return success, failure


def real_schmidt_form(psi):
    """
    Real Schmidt coefficients alpha >= beta of a two-qubit pure state

    Local basis changes (which carry the phases) bring psi to alpha|00> + beta|11>.
    """
    if psi.dims != (2, 2):
        raise ShapeError(f"Expected a two-qubit state, got dims {list(psi.dims)}")
    values, _ = cmatrix.hermitian_eig(cmatrix.partial_trace(cmatrix.projector(psi.vector), psi.dims, [0]))
    values = np.clip(values, 0.0, None)
    return SchmidtForm(alpha=math.sqrt(values[0]), beta=math.sqrt(values[1]))


def sample_distillation(alpha, beta, trials, seed):
    """Seeded draw of ancilla measurement outcomes over `trials` fresh pairs"""
    if trials <= 0:
        raise ContractError("Sampling needs at least one trial")
    success, _ = procrustean_distill(alpha, beta)
    rng = np.random.default_rng(seed)
    successes = int(np.count_nonzero(rng.random(trials) < success.probability))
    return SamplingSummary(successes=successes, trials=trials, rate=successes / trials)


def entanglement_entropy(psi):
    """Entropy of the first subsystem's reduced state, in ebits"""
    if len(psi.dims) != 2:
        raise ShapeError(f"Entanglement entropy needs a bipartite state, got dims {list(psi.dims)}")
    return von_neumann(reduced(psi.density(), [0]))


def distill_bound(psi, N):
    """Upper bound S(rho_A) / log2 N on the probability of distilling a maximally entangled N-level pair"""
    if N < 2:
        raise ContractError(f"Need at least two outcomes, got N={N}")
    return min(1.0, entanglement_entropy(psi) / math.log2(N))


def measurement_entanglement(apparatus_states):
    """
    Entanglement left between a system and an imperfect measuring apparatus

    The joint state is sum_i |s_i>|a_i> / sqrt(N) over N system basis states; with
    non-orthogonal apparatus states |a_i> the result falls below log2 N.
    """
    pointers = [cmatrix.as_vector(getattr(a, 'vector', a)) for a in apparatus_states]
    N = len(pointers)
    if N < 2:
        raise ContractError("Need at least two apparatus states")
    if len({p.size for p in pointers}) != 1:
        raise ShapeError("Apparatus states must share a dimension")
    system = np.eye(N, dtype=np.complex128)
    joint = sum(cmatrix.tensor(system[i], pointer) for i, pointer in enumerate(pointers))
    return entanglement_entropy(PureState.from_amplitudes(joint, (N, pointers[0].size)))

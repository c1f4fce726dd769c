"""
Toy-scale Schumacher compression of a block of qubits drawn from a memoryless source.

The compressor is a basis permutation: the k-th most likely source string is sent
to the basis index k, so every typical string ends up with its leading n - m qubits
in |0>. Those qubits are then discarded by projecting them onto |0...0>.
Permutations act on state vectors as index maps; no 2^n x 2^n matrix is built.
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import cmatrix
from .entropy import LN2, binary_entropy, von_neumann
from .exceptions import CompressionFailure, ContractError, NumericalError, ResourceError, ShapeError
from .qstate import DensityOperator, PureState, density_from_ensemble

logger = logging.getLogger(__name__)

MAX_BLOCK_QUBITS = 16
MAX_PERMUTATION_MATRIX_QUBITS = 10
ZERO_PROJECTION = 1e-15
SIMULATION_BATCH = 100_000


def _frozen(array, dtype):
    array = np.array(array, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SourceSpec:
    """Single-qubit source state with eigenbasis columns ordered so that p0 >= p1"""
    single_qubit_rho: DensityOperator
    eigenbasis: np.ndarray
    eigenprobs: tuple

    def __post_init__(self):
        p0, p1 = (float(p) for p in self.eigenprobs)
        if abs(p0 + p1 - 1) > cmatrix.DEFAULT_TOLERANCE or p0 < p1:
            raise ContractError(f"Source eigenprobabilities must satisfy p0 >= p1, p0 + p1 = 1; got ({p0}, {p1})")
        object.__setattr__(self, 'eigenprobs', (p0, p1))
        basis = cmatrix.as_matrix(self.eigenbasis)
        if basis.shape != (2, 2) or not cmatrix.is_unitary(basis, 1e-9):
            raise ContractError("Source eigenbasis must be a 2x2 unitary")
        object.__setattr__(self, 'eigenbasis', _frozen(basis, np.complex128))

    @property
    def p0(self):
        return self.eigenprobs[0]

    @property
    def p1(self):
        return self.eigenprobs[1]

    @property
    def diagonal(self):
        """True when the eigenbasis is the computational basis (up to phases)"""
        return bool(np.allclose(np.abs(self.eigenbasis), np.eye(2), atol=1e-12))


@dataclass(frozen=True, eq=False)
class CompressionScheme:
    n: int
    m: int
    typical: tuple
    perm: np.ndarray
    basis: np.ndarray

    def __post_init__(self):
        if len(self.typical) > 2 ** self.m:
            raise ContractError(f"{len(self.typical)} typical strings do not fit in {self.m} qubits")
        perm = np.asarray(self.perm, dtype=np.int64)
        if perm.shape != (2 ** self.n,) or not np.array_equal(np.sort(perm), np.arange(2 ** self.n)):
            raise ContractError("Scheme permutation is not a bijection on the block basis")
        object.__setattr__(self, 'perm', _frozen(perm, np.int64))
        object.__setattr__(self, 'basis', _frozen(self.basis, np.complex128))

    @property
    def inverse(self):
        inverse = np.empty_like(self.perm)
        inverse[self.perm] = np.arange(self.perm.size)
        return inverse


class CompressionResult(NamedTuple):
    compressed: PureState
    success_prob: float


class LedgerComparison(NamedTuple):
    rate: float
    compressed_erasure: float
    direct_erasure: float


def source_from_probability(p0):
    """Diagonal source rho = p0 |0><0| + (1 - p0) |1><1|"""
    if not 0.5 <= p0 <= 1:
        raise ContractError(f"Expected the dominant probability p0 in [0.5, 1], got {p0}")
    rho = DensityOperator(np.diag([p0, 1 - p0]))
    return SourceSpec(rho, np.eye(2), (p0, 1 - p0))


def diagonalize_source(ensemble):
    """
    Eigendecomposition of the single-qubit source state

    A non-orthogonal ensemble is replaced by the orthogonal one of its eigenvectors,
    which has the same density operator.
    """
    if ensemble.dims != (2,):
        raise ShapeError(f"Sources emit single qubits, got dims {list(ensemble.dims)}")
    rho = density_from_ensemble(ensemble)
    values, vectors = cmatrix.hermitian_eig(rho.matrix)
    for column in range(2):
        pivot = int(np.argmax(np.abs(vectors[:, column])))
        vectors[:, column] *= np.conj(vectors[pivot, column]) / abs(vectors[pivot, column])
    probs = np.clip(values, 0.0, None)
    probs = probs / probs.sum()
    return SourceSpec(rho, vectors, (float(probs[0]), float(probs[1])))


def _check_block(n):
    if n < 1:
        raise ContractError(f"Block length must be positive, got {n}")
    if n > MAX_BLOCK_QUBITS:
        raise ResourceError(f"Blocks of {n} qubits exceed the {MAX_BLOCK_QUBITS}-qubit guard")


def _ones_per_index(n):
    indices = np.arange(2 ** n, dtype=np.int64)
    ones = np.zeros(indices.size, dtype=np.int64)
    for shift in range(n):
        ones += (indices >> shift) & 1
    return ones


def string_probabilities(spec, n):
    """p0^(#0) p1^(#1) for every n-bit string, indexed by its integer value"""
    _check_block(n)
    per_count = np.array([spec.p0 ** (n - k) * spec.p1 ** k for k in range(n + 1)])
    return per_count[_ones_per_index(n)]


def _index_to_bits(index, n):
    return tuple(int(b) for b in format(int(index), f'0{n}b'))


def _typical_indices(spec, n, max_count):
    probabilities = string_probabilities(spec, n)
    order = np.lexsort((np.arange(probabilities.size), -probabilities))
    order = order[probabilities[order] > 0]
    return order[:max_count]


def typical_strings(spec, n, max_count):
    """
    Most likely n-bit strings, most likely first

    Ties are broken lexicographically; strings of probability zero are never listed.
    """
    if max_count < 1:
        raise ContractError(f"max_count must be positive, got {max_count}")
    return [_index_to_bits(i, n) for i in _typical_indices(spec, n, max_count)]


def build_scheme(spec, n, m):
    _check_block(n)
    if not 1 <= m < n:
        raise ContractError(f"Compression needs 1 <= m < n, got n={n}, m={m}")
    chosen = _typical_indices(spec, n, 2 ** m)
    perm = np.empty(2 ** n, dtype=np.int64)
    perm[chosen] = np.arange(chosen.size)
    rest = np.setdiff1d(np.arange(2 ** n), chosen)
    perm[rest] = np.arange(chosen.size, 2 ** n)
    typical = tuple(_index_to_bits(i, n) for i in chosen)
    logger.debug(f"Scheme n={n} m={m}: {len(typical)} typical strings")
    return CompressionScheme(n=n, m=m, typical=typical, perm=perm, basis=spec.eigenbasis)


def permutation_matrix(scheme):
    """Explicit 0/1 matrix of the scheme's basis permutation"""
    if scheme.n > MAX_PERMUTATION_MATRIX_QUBITS:
        raise ResourceError(f"Refusing to build a permutation matrix on {scheme.n} qubits")
    size = 2 ** scheme.n
    matrix = np.zeros((size, size), dtype=np.complex128)
    matrix[scheme.perm, np.arange(size)] = 1
    return matrix


def _rotate_qubits(vector, gate, n):
    """Apply the same 2x2 gate to every qubit of an n-qubit vector"""
    tensor = vector.reshape((2,) * n)
    for axis in range(n):
        tensor = np.moveaxis(np.tensordot(gate, tensor, axes=([1], [axis])), 0, axis)
    return tensor.reshape(-1)


def _check_register(psi, qubits):
    if psi.dim != 2 ** qubits:
        raise ShapeError(f"Expected a state on {qubits} qubits, got dims {list(psi.dims)}")


def compress(psi, scheme):
    """
    Permute, then keep the trailing m qubits conditioned on the leading ones reading 0

    Raises CompressionFailure when psi has no weight on the typical subspace.
    """
    _check_register(psi, scheme.n)
    vector = np.array(psi.vector)
    if not np.allclose(scheme.basis, np.eye(2), atol=1e-15):
        vector = _rotate_qubits(vector, scheme.basis.conj().T, scheme.n)
    permuted = np.empty_like(vector)
    permuted[scheme.perm] = vector
    head = permuted[:2 ** scheme.m]
    success_prob = float(np.vdot(head, head).real)
    if success_prob < ZERO_PROJECTION:
        raise CompressionFailure(0.0)
    success_prob = min(success_prob, 1.0)
    compressed = PureState(head / np.sqrt(success_prob), (2,) * scheme.m)
    return CompressionResult(compressed=compressed, success_prob=success_prob)


def decompress(compressed, scheme):
    """Append |0> on the leading n - m qubits and undo the permutation"""
    _check_register(compressed, scheme.m)
    full = np.zeros(2 ** scheme.n, dtype=np.complex128)
    full[:2 ** scheme.m] = compressed.vector
    vector = full[scheme.perm]
    if not np.allclose(scheme.basis, np.eye(2), atol=1e-15):
        vector = _rotate_qubits(vector, scheme.basis, scheme.n)
    return PureState(vector, (2,) * scheme.n)


def fidelity(psi, phi):
    """|<psi|phi>|^2"""
    return float(abs(np.vdot(psi.vector, phi.vector)) ** 2)


def block_success_prob(spec, n, m):
    """Probability that a source block lies in the span of the scheme's typical strings"""
    _check_block(n)
    probabilities = string_probabilities(spec, n)
    return float(probabilities[_typical_indices(spec, n, 2 ** m)].sum())


def asymptotic_rate(spec):
    """Qubits per source qubit needed for long blocks: H(p0)"""
    return binary_entropy(spec.p0)


def simulate_block_success(spec, scheme, trials, seed):
    """
    Monte Carlo rate at which blocks sampled from the source eigenbasis compress

    A sampled string compresses when the permutation sends it below 2^m.
    """
    if trials <= 0:
        raise ContractError("Simulation needs at least one trial")
    rng = np.random.default_rng(seed)
    weights = 1 << np.arange(scheme.n - 1, -1, -1, dtype=np.int64)
    successes = 0
    remaining = trials
    while remaining > 0:
        batch = min(remaining, SIMULATION_BATCH)
        ones = (rng.random((batch, scheme.n)) < spec.p1).astype(np.int64)
        indices = ones @ weights
        successes += int(np.count_nonzero(scheme.perm[indices] < 2 ** scheme.m))
        remaining -= batch
    return successes / trials


def compression_ledgers(spec, n, epsilon):
    """
    Erasure entropies (units of k) for a block of n source qubits

    compressed_erasure erases a hypothetical code of n (S - epsilon) qubits in the
    maximally mixed state; direct_erasure erases the n uncompressed qubits optimally.
    """
    if epsilon < 0:
        raise ContractError(f"epsilon must be nonnegative, got {epsilon}")
    rate = von_neumann(spec.single_qubit_rho)
    return LedgerComparison(
        rate=rate,
        compressed_erasure=n * max(rate - epsilon, 0.0) * LN2,
        direct_erasure=n * rate * LN2,
    )


def landauer_rate_bound(spec, n=1000, epsilon=1e-3):
    """
    The von Neumann entropy S(rho), below which no compressor can go

    Erasing the code of a compressor running at S - epsilon would cost less than
    erasing the source itself, which Landauer's principle forbids.
    """
    ledgers = compression_ledgers(spec, n, epsilon)
    if ledgers.rate > 0 and not ledgers.compressed_erasure < ledgers.direct_erasure:
        raise NumericalError("Sub-entropy compression failed to undercut the direct erasure cost")
    return ledgers.rate

"""
Dense complex linear algebra for small Hilbert spaces.

States, observables and unitaries are plain numpy complex128 arrays: 1-D for
vectors, 2-D for matrices. Subsystem 0 is always the most significant tensor
factor, so |1>|0> reads as the binary index 10 = 2.
"""
import logging
import math
from functools import reduce

import numpy as np

from .exceptions import ContractError, ConvergenceError, DomainError, ResourceError, ShapeError

logger = logging.getLogger(__name__)

MAX_MATRIX_ENTRIES = 2 ** 20
MAX_VECTOR_ENTRIES = 2 ** 20

DEFAULT_TOLERANCE = 1e-9
HERMITIAN_TOLERANCE = 1e-10
LOG_CUTOFF = 1e-12

JACOBI_RELATIVE_TOLERANCE = 1e-14
JACOBI_MAX_SWEEPS = 50


def as_vector(values):
    """
    Coerce input to a finite complex vector

    Args:
        values: sequence of numbers or 1-D array

    Returns:
        np.ndarray: complex128 vector (a copy when the dtype changes)
    """
    vector = np.asarray(values, dtype=np.complex128)
    if vector.ndim != 1 or vector.size == 0:
        raise ShapeError(f"Expected a nonempty vector, got shape {vector.shape}")
    if vector.size > MAX_VECTOR_ENTRIES:
        raise ResourceError(f"Vector of {vector.size} entries exceeds the {MAX_VECTOR_ENTRIES} guard")
    if not np.all(np.isfinite(vector)):
        raise ContractError("Vector entries must be finite")
    return vector


def as_matrix(values):
    """
    Coerce input to a finite complex matrix

    Args:
        values: nested sequence or 2-D array

    Returns:
        np.ndarray: complex128 matrix
    """
    matrix = np.asarray(values, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.size == 0:
        raise ShapeError(f"Expected a nonempty matrix, got shape {matrix.shape}")
    if matrix.size > MAX_MATRIX_ENTRIES:
        raise ResourceError(f"Matrix of {matrix.size} entries exceeds the {MAX_MATRIX_ENTRIES} guard")
    if not np.all(np.isfinite(matrix)):
        raise ContractError("Matrix entries must be finite")
    return matrix


def _as_operand(values):
    array = np.asarray(values, dtype=np.complex128)
    return as_vector(array) if array.ndim == 1 else as_matrix(array)


def _require_square(matrix):
    if matrix.shape[0] != matrix.shape[1]:
        raise ShapeError(f"Square matrix required, got {matrix.shape[0]}x{matrix.shape[1]}")


def tensor(a, b):
    """
    Kronecker product, first factor most significant.

    (a (x) b)[i*rows_b + k, j*cols_b + l] = a[i, j] * b[k, l]; vectors combine with
    vectors and matrices with matrices.
    """
    a = _as_operand(a)
    b = _as_operand(b)
    if a.ndim != b.ndim:
        raise ShapeError("Cannot tensor a vector with a matrix")
    limit = MAX_VECTOR_ENTRIES if a.ndim == 1 else MAX_MATRIX_ENTRIES
    if a.size * b.size > limit:
        raise ResourceError(f"Tensor product of {a.size * b.size} entries exceeds the {limit} guard")
    return np.kron(a, b)


def tensor_all(*operands):
    if not operands:
        raise ShapeError("tensor_all needs at least one operand")
    return reduce(tensor, operands[1:], _as_operand(operands[0]))


def outer(v, w):
    """result[i, j] = v[i] * conj(w[j])"""
    v = as_vector(v)
    w = as_vector(w)
    if v.size * w.size > MAX_MATRIX_ENTRIES:
        raise ResourceError(f"Outer product of {v.size * w.size} entries exceeds the guard")
    return np.outer(v, w.conj())


def projector(v):
    return outer(v, v)


def matmul(a, b):
    a = _as_operand(a)
    b = _as_operand(b)
    if a.shape[-1] != b.shape[0]:
        raise ShapeError(f"Cannot multiply {a.shape} by {b.shape}")
    return a @ b


def dagger(a):
    return as_matrix(a).conj().T


def trace(a):
    matrix = as_matrix(a)
    _require_square(matrix)
    return complex(np.trace(matrix))


def add(a, b):
    a = _as_operand(a)
    b = _as_operand(b)
    if a.shape != b.shape:
        raise ShapeError(f"Cannot add {a.shape} and {b.shape}")
    return a + b


def scale(a, factor):
    return _as_operand(a) * complex(factor)


def max_deviation(a, b):
    """Elementwise max-norm distance; every tolerance in the toolkit is measured this way."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ShapeError(f"Cannot compare {a.shape} with {b.shape}")
    return float(np.max(np.abs(a - b)))


def is_hermitian(m, tolerance=DEFAULT_TOLERANCE):
    matrix = as_matrix(m)
    if matrix.shape[0] != matrix.shape[1]:
        return False
    return max_deviation(matrix, matrix.conj().T) <= tolerance


def is_unitary(m, tolerance=DEFAULT_TOLERANCE):
    matrix = as_matrix(m)
    if matrix.shape[0] != matrix.shape[1]:
        return False
    identity = np.eye(matrix.shape[0])
    return (max_deviation(matrix @ matrix.conj().T, identity) <= tolerance
            and max_deviation(matrix.conj().T @ matrix, identity) <= tolerance)


def is_density(m, tolerance=DEFAULT_TOLERANCE):
    """Hermitian, unit trace and no eigenvalue below -tolerance"""
    matrix = as_matrix(m)
    if not is_hermitian(matrix, tolerance):
        return False
    if abs(np.trace(matrix) - 1) > tolerance:
        return False
    values, _ = hermitian_eig(matrix, tolerance=tolerance)
    return bool(values[-1] >= -tolerance)


def _off_diagonal_norm(matrix):
    return float(np.linalg.norm(matrix - np.diag(np.diag(matrix))))


def _round_robin(side):
    """
    Pivot pairs of one cyclic sweep, grouped into side - 1 rounds of disjoint pairs

    Every pair (p, q) with p < q appears exactly once per sweep. An odd side gets a
    phantom index whose pairs are dropped.
    """
    players = list(range(side + side % 2))
    rounds = []
    for _ in range(len(players) - 1):
        pairs = [
            (min(players[i], players[-1 - i]), max(players[i], players[-1 - i]))
            for i in range(len(players) // 2)
        ]
        pairs = [pair for pair in pairs if pair[1] < side]
        rounds.append((
            np.array([p for p, _ in pairs], dtype=np.intp),
            np.array([q for _, q in pairs], dtype=np.intp),
        ))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _jacobi_round(a, v, p, q, skip_below):
    apq = a[p, q]
    magnitude = np.abs(apq)
    active = magnitude > skip_below
    phase = np.where(active, apq / np.where(active, magnitude, 1.0), 1.0)
    theta = np.where(active, 0.5 * np.arctan2(2.0 * magnitude, a[q, q].real - a[p, p].real), 0.0)
    c = np.cos(theta)
    s = np.sin(theta)
    # diag(1, conj(phase)) makes each pivot real, then a real plane rotation zeroes it;
    # the pairs are disjoint so the whole round is one block-diagonal unitary J
    j_pq = -s * phase.conj()
    j_qq = c * phase.conj()
    cols_p, cols_q = a[:, p], a[:, q]
    a[:, p] = cols_p * c + cols_q * j_pq
    a[:, q] = cols_p * s + cols_q * j_qq
    rows_p, rows_q = a[p, :], a[q, :]
    a[p, :] = c[:, None] * rows_p + j_pq.conj()[:, None] * rows_q
    a[q, :] = s[:, None] * rows_p + j_qq.conj()[:, None] * rows_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    vecs_p, vecs_q = v[:, p], v[:, q]
    v[:, p] = vecs_p * c + vecs_q * j_pq
    v[:, q] = vecs_p * s + vecs_q * j_qq


def hermitian_eig(m, tolerance=HERMITIAN_TOLERANCE):
    """
    Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations

    Each sweep visits every off-diagonal pivot once in round-robin order, applying
    the side // 2 disjoint rotations of a round together.

    Args:
        m: square Hermitian matrix
        tolerance: allowed elementwise deviation from m == m^dagger

    Returns:
        tuple: (values, vectors) with values sorted descending and the
        eigenvectors as the orthonormal columns of a unitary matrix
    """
    matrix = as_matrix(m)
    _require_square(matrix)
    if not is_hermitian(matrix, tolerance):
        raise ContractError(
            f"hermitian_eig needs a Hermitian matrix (deviation {max_deviation(matrix, matrix.conj().T):.3e})"
        )

    side = matrix.shape[0]
    a = (matrix + matrix.conj().T) / 2
    if not np.any(a.imag):
        a = a.real.copy()
    v = np.eye(side, dtype=a.dtype)
    norm = float(np.linalg.norm(a))
    threshold = JACOBI_RELATIVE_TOLERANCE * norm
    skip_below = max(1e-18 * norm, np.finfo(float).tiny)
    rounds = _round_robin(side)

    sweeps = 0
    off = _off_diagonal_norm(a)
    while off > threshold:
        if sweeps == JACOBI_MAX_SWEEPS:
            if off > 1e-12 * norm:
                raise ConvergenceError(f"Jacobi did not converge after {sweeps} sweeps (off-diagonal {off:.3e})")
            logger.warning(f"Jacobi stopped after {sweeps} sweeps with off-diagonal mass {off:.3e}")
            break
        for p, q in rounds:
            _jacobi_round(a, v, p, q, skip_below)
        sweeps += 1
        previous, off = off, _off_diagonal_norm(a)
        if off <= 1e-12 * norm and off > previous / 2:
            # rounding floor of a large matrix
            logger.debug(f"Jacobi stalled at off-diagonal mass {off:.3e} on side {side}")
            break

    logger.debug(f"Jacobi converged on side {side} in {sweeps} sweeps")
    values = a.diagonal().real.copy()
    order = np.argsort(-values, kind='stable')
    return values[order], v[:, order].astype(np.complex128)


def mat_func(h, f):
    """
    Apply a scalar function to a Hermitian matrix through its eigenvalues: V diag(f(l)) V^dagger

    Raises DomainError when f is undefined (or not finite) on some eigenvalue.
    """
    values, vectors = hermitian_eig(h)
    mapped = np.empty(values.size, dtype=np.complex128)
    for index, value in enumerate(values):
        try:
            mapped[index] = complex(f(float(value)))
        except DomainError:
            raise
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise DomainError(f"Function undefined on eigenvalue {value:.6g}: {exc}") from exc
        if not np.isfinite(mapped[index]):
            raise DomainError(f"Function is not finite on eigenvalue {value:.6g}")
    return (vectors * mapped) @ vectors.conj().T


def mat_log(h, base=math.e):
    """Matrix logarithm; eigenvalues below LOG_CUTOFF count as exact zeros and are rejected."""
    log_base = math.log(base)

    def _log(value):
        if value <= LOG_CUTOFF:
            raise DomainError(f"Logarithm undefined on eigenvalue {value:.3e} (cutoff {LOG_CUTOFF})")
        return math.log(value) / log_base

    return mat_func(h, _log)


def mat_exp_unitary(h, t, hbar=1.0):
    """exp(-i h t / hbar)"""
    return mat_func(h, lambda value: np.exp(-1j * value * t / hbar))


def partial_trace(m, dims, keep):
    """
    Trace out every subsystem not listed in keep

    Args:
        m: square matrix on the space of product(dims)
        dims: subsystem dimensions, subsystem 0 most significant
        keep: indices of the subsystems to keep (order is normalized)

    Returns:
        np.ndarray: reduced matrix; a 1x1 matrix holding the trace when keep is empty
    """
    matrix = as_matrix(m)
    _require_square(matrix)
    dims = [int(d) for d in dims]
    if not dims or any(d < 1 for d in dims):
        raise ShapeError(f"Invalid subsystem dimensions {dims}")
    if math.prod(dims) != matrix.shape[0]:
        raise ShapeError(f"Subsystem dimensions {dims} do not match matrix side {matrix.shape[0]}")
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= len(dims) for k in keep):
        raise ShapeError(f"Subsystem indices {keep} out of range for {len(dims)} subsystems")

    count = len(dims)
    rows = list(range(count))
    cols = [count + i if i in keep else i for i in range(count)]
    out = keep + [count + i for i in keep]
    reduced = np.einsum(matrix.reshape(dims + dims), rows + cols, out)
    side = math.prod(dims[i] for i in keep)
    return np.asarray(reduced, dtype=np.complex128).reshape(side, side)

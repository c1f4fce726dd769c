"""
Classical and quantum entropy functionals.

Information quantities are in bits; thermodynamic entropies are in units of k
(multiply bits by k ln 2). The convention 0 log 0 = 0 holds everywhere.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from . import cmatrix
from .exceptions import ContractError, DomainError, ShapeError

logger = logging.getLogger(__name__)

LN2 = math.log(2)
DISTRIBUTION_TOLERANCE = 1e-9
NEGATIVE_EIGENVALUE_LIMIT = 1e-6


@dataclass(frozen=True)
class EntropyValue:
    bits: float
    thermo: float = None

    @classmethod
    def from_bits(cls, bits, k=1.0):
        return cls(bits=bits, thermo=bits_to_thermo(bits, k))


def bits_to_thermo(bits, k=1.0):
    return bits * k * LN2


def thermo_to_bits(entropy, k=1.0):
    return entropy / (k * LN2)


def as_distribution(p, tolerance=DISTRIBUTION_TOLERANCE):
    """Validate a probability list: nonnegative entries summing to 1"""
    dist = np.asarray(p, dtype=float).ravel()
    if dist.size == 0:
        raise ContractError("Empty probability distribution")
    if np.any(dist < 0):
        raise ContractError(f"Negative probability in {dist.tolist()}")
    total = float(dist.sum())
    if abs(total - 1) > tolerance:
        raise ContractError(f"probabilities sum to {total:.12g}")
    return dist


def surprise(p):
    """log2(1/p), the information gained on seeing an event of probability p"""
    if not 0 < p <= 1:
        raise DomainError(f"Surprise is defined for 0 < p <= 1, got {p}")
    return -math.log2(p)


def _shannon_bits(dist):
    return float(-np.sum(xlogy(dist, dist)) / LN2)


def shannon(p):
    """H(p) = -sum p_i log2 p_i"""
    dist = as_distribution(p)
    value = _shannon_bits(dist)
    return min(max(value, 0.0), math.log2(dist.size)) if dist.size > 1 else 0.0


def binary_entropy(q):
    if not 0 <= q <= 1:
        raise DomainError(f"Binary entropy needs 0 <= q <= 1, got {q}")
    return shannon([q, 1 - q])


def joint_entropy(joint):
    """Shannon entropy of a joint probability table"""
    return shannon(np.asarray(joint, dtype=float).ravel())


def mutual_information(joint):
    """I(X;Y) = H(X) + H(Y) - H(X,Y) for a 2-D joint probability table"""
    table = np.asarray(joint, dtype=float)
    if table.ndim != 2:
        raise ShapeError(f"Joint distribution must be a 2-D table, got shape {table.shape}")
    as_distribution(table.ravel())
    value = shannon(table.sum(axis=1)) + shannon(table.sum(axis=0)) - joint_entropy(table)
    return max(value, 0.0)


def spectrum(rho):
    """
    Eigenvalues of a density operator as a probability distribution

    Eigenvalues in [-1e-6, 0) are rounding from the eigensolver and are clamped to 0;
    anything more negative is a contract violation.
    """
    values, _ = cmatrix.hermitian_eig(getattr(rho, 'matrix', rho))
    if values[-1] < -NEGATIVE_EIGENVALUE_LIMIT:
        raise ContractError(f"Density operator has eigenvalue {values[-1]:.3e} < 0")
    if values[-1] < -DISTRIBUTION_TOLERANCE:
        logger.warning(f"Clamping negative eigenvalue {values[-1]:.3e} to zero")
    values = np.clip(values, 0.0, None)
    total = values.sum()
    if abs(total - 1) > DISTRIBUTION_TOLERANCE:
        raise ContractError(f"Density operator trace is {total:.12g}, expected 1")
    return values / total


def von_neumann(rho):
    """S(rho) = -tr(rho log2 rho), the Shannon entropy of the eigenvalues"""
    return shannon(spectrum(rho))


def boltzmann(p, k=1.0):
    """Thermodynamic entropy S = -k ln2 sum p_i log2 p_i, in units of k"""
    return bits_to_thermo(shannon(p), k)


def erasure_cross_term(rho, omega, k=1.0):
    """
    Total entropy -k tr(rho ln omega) generated by thermalizing rho into omega

    omega must be strictly positive (above the 1e-12 cutoff) wherever rho has weight.
    By Klein's inequality the result is at least k ln2 S(rho), with equality iff omega = rho.
    """
    rho_matrix = getattr(rho, 'matrix', rho)
    omega_matrix = getattr(omega, 'matrix', omega)
    if np.shape(rho_matrix) != np.shape(omega_matrix):
        raise ShapeError(f"Cannot compare states of shape {np.shape(rho_matrix)} and {np.shape(omega_matrix)}")
    values, vectors = cmatrix.hermitian_eig(omega_matrix)
    # weights of rho on the eigenvectors of omega
    weights = np.einsum('ij,jk,ki->i', vectors.conj().T, rho_matrix, vectors).real
    total = 0.0
    for value, weight in zip(values, weights):
        if value <= cmatrix.LOG_CUTOFF:
            if weight > DISTRIBUTION_TOLERANCE:
                raise DomainError(
                    f"omega vanishes (eigenvalue {value:.3e}) where rho has weight {weight:.3e}"
                )
            continue
        total -= weight * math.log(value)
    return k * total

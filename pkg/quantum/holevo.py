"""
Classical capacity of a quantum signal ensemble: the Holevo quantity, the
two-step erasure ledger that bounds it, and a fixed-basis measurement witness.
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import cmatrix
from .entropy import DISTRIBUTION_TOLERANCE, as_distribution, mutual_information, von_neumann
from .exceptions import ContractError, NumericalError, ShapeError
from .qstate import DensityOperator, Ensemble, PureState, density_from_ensemble, density_matrix, measure_prob

logger = logging.getLogger(__name__)

# Signal ensembles are ordinary ensembles whose members may be mixed
SignalEnsemble = Ensemble


class TwoStepLedger(NamedTuple):
    dS1: float
    dS2: float
    dS_bob: float


@dataclass(frozen=True, eq=False)
class CodedSource:
    """
    Letter i appears with probability outer[i]; given i, the pure state states[i][a]
    is sent with probability inner[i][a].
    """
    outer: tuple
    inner: tuple
    states: tuple

    def __post_init__(self):
        outer = tuple(float(p) for p in as_distribution(self.outer))
        inner = tuple(tuple(float(r) for r in as_distribution(row)) for row in self.inner)
        states = tuple(tuple(row) for row in self.states)
        if not len(outer) == len(inner) == len(states):
            raise ShapeError("outer, inner and states must have one entry per letter")
        for row_weights, row_states in zip(inner, states):
            if len(row_weights) != len(row_states):
                raise ShapeError("Each inner distribution needs one state per entry")
            if any(not isinstance(state, PureState) for state in row_states):
                raise ContractError("Coded sources encode into pure states")
        if len({state.dims for row in states for state in row}) != 1:
            raise ShapeError("All encoded states must share dimensions")
        object.__setattr__(self, 'outer', outer)
        object.__setattr__(self, 'inner', inner)
        object.__setattr__(self, 'states', states)

    @property
    def dims(self):
        return self.states[0][0].dims


def _nonnegative(value, what):
    if value < -DISTRIBUTION_TOLERANCE:
        raise NumericalError(f"{what} came out negative: {value:.3e}")
    return max(value, 0.0)


def holevo_bound(ensemble):
    """chi = S(sum_i p_i rho_i) - sum_i p_i S(rho_i), in bits"""
    average = density_from_ensemble(ensemble)
    conditional = sum(
        p * von_neumann(DensityOperator(density_matrix(state), state.dims))
        for p, state in ensemble.items if p > 0
    )
    return _nonnegative(von_neumann(average) - conditional, 'Holevo quantity')


def ensemble_from_coded_source(source):
    """Signal ensemble {p_i, rho_i} with rho_i = sum_a r^i_a |phi^i_a><phi^i_a|"""
    members = []
    for p, weights, states in zip(source.outer, source.inner, source.states):
        rho_i = sum(r * cmatrix.projector(state.vector) for r, state in zip(weights, states))
        members.append((p, DensityOperator(rho_i, source.dims)))
    return Ensemble(tuple(members))


def two_step_ledger(source):
    """
    Entropies of erasing Bob's message in two steps

    dS1 erases the letters' internal randomness (sum_i p_i S(rho_i)); dS2 erases the
    whole source (S(rho)). Bob can have learned at most dS_bob = dS2 - dS1.
    """
    induced = ensemble_from_coded_source(source)
    dS1 = sum(p * von_neumann(rho_i) for p, rho_i in induced.items)
    flat = [
        (p * r, state)
        for p, weights, states in zip(source.outer, source.inner, source.states)
        for r, state in zip(weights, states)
    ]
    dS2 = von_neumann(density_from_ensemble(Ensemble(tuple(flat))))
    dS_bob = _nonnegative(dS2 - dS1, 'Erasure entropy difference')
    chi = holevo_bound(induced)
    if abs(dS_bob - chi) > DISTRIBUTION_TOLERANCE:
        raise NumericalError(f"Two-step ledger {dS_bob:.12g} disagrees with the Holevo bound {chi:.12g}")
    return TwoStepLedger(dS1=dS1, dS2=dS2, dS_bob=dS_bob)


def computational_basis(dim):
    """Projectors |j><j| for j = 0..dim-1"""
    projectors = []
    for j in range(dim):
        projector = np.zeros((dim, dim), dtype=np.complex128)
        projector[j, j] = 1
        projectors.append(projector)
    return projectors


def _check_measurement(projectors, dim):
    if cmatrix.max_deviation(sum(projectors), np.eye(dim)) > DISTRIBUTION_TOLERANCE:
        raise ContractError("Measurement projectors do not sum to the identity")
    for a, first in enumerate(projectors):
        for second in projectors[a + 1:]:
            if np.max(np.abs(first @ second)) > DISTRIBUTION_TOLERANCE:
                raise ContractError("Measurement projectors are not mutually orthogonal")


def measurement_mutual_info(ensemble, basis):
    """
    Mutual information between the letter i and the outcome j of a fixed projective
    measurement, with P(i, j) = p_i tr(P_j rho_i). Never exceeds the Holevo bound.
    """
    projectors = [cmatrix.as_matrix(p) for p in basis]
    dim = int(np.prod(ensemble.dims))
    if any(p.shape != (dim, dim) for p in projectors):
        raise ShapeError(f"Projectors must be {dim}x{dim}")
    _check_measurement(projectors, dim)
    joint = np.zeros((len(ensemble.items), len(projectors)))
    for i, (p, state) in enumerate(ensemble.items):
        rho_i = DensityOperator(density_matrix(state), state.dims)
        for j, projector in enumerate(projectors):
            joint[i, j] = p * measure_prob(rho_i, projector)
    # clamping inside measure_prob can leave the table off unit mass by ~1e-16
    joint /= joint.sum()
    return mutual_information(joint)

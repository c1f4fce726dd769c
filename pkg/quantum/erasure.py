"""
Landauer bookkeeping for erasure: the Szilard engine cycle and erasure of
quantum-encoded information by thermal randomization.

Units: k = 1. Energies carry the units of T, entropies are in units of k
(nats); bits are converted with explicit ln 2 factors at the boundaries.
"""
import logging
import math
from dataclasses import asdict, dataclass

import numpy as np

from . import cmatrix
from .entropy import LN2, erasure_cross_term, von_neumann
from .exceptions import DomainError, NumericalError
from .qstate import DensityOperator, Observable

logger = logging.getLogger(__name__)

LEDGER_TOLERANCE = 1e-9


@dataclass(frozen=True)
class WorkLedger:
    w_extracted: float
    w_erasure: float
    q_total: float
    delta_S_system: float
    delta_S_bath: float
    delta_S_total: float
    info_bits: float
    generalized_entropy: float

    def __post_init__(self):
        work = self.w_extracted + self.w_erasure
        if abs(self.q_total - work) > LEDGER_TOLERANCE * max(1.0, abs(work)):
            raise NumericalError(f"Heat {self.q_total} does not balance work {work}")
        entropy = self.delta_S_system + self.delta_S_bath
        if abs(self.delta_S_total - entropy) > LEDGER_TOLERANCE * max(1.0, abs(entropy)):
            raise NumericalError(
                f"Total entropy {self.delta_S_total} differs from system + bath {entropy}"
            )

    def as_dict(self):
        return asdict(self)

    def scaled(self, k):
        """Same ledger with entropies and energies multiplied by a physical Boltzmann constant"""
        values = self.as_dict()
        for name in ('w_extracted', 'w_erasure', 'q_total', 'delta_S_system', 'delta_S_bath', 'delta_S_total'):
            values[name] *= k
        return WorkLedger(**values)


@dataclass(frozen=True, eq=False)
class ThermalSpec:
    hamiltonian: Observable
    temperature: float

    def __post_init__(self):
        if not self.temperature > 0:
            raise DomainError(f"Temperature must be positive, got {self.temperature}")

    @property
    def partition_function(self):
        """Z = tr exp(-H / T)"""
        energies, _ = cmatrix.hermitian_eig(self.hamiltonian.matrix)
        return float(np.sum(np.exp(-energies / self.temperature)))


def szilard_cycle(T):
    """
    One cycle of Szilard's engine followed by erasure of the demon's one-bit record

    The expansion stroke draws kT ln2 from the bath as work; erasing the memory costs
    the same, so no net work or heat remains and the generalized entropy is zero.
    """
    if not T > 0:
        raise DomainError(f"Temperature must be positive, got {T}")
    w_extracted = T * LN2
    w_erasure = -T * LN2
    info_bits = 1.0
    delta_S_system = w_extracted / T
    ledger = WorkLedger(
        w_extracted=w_extracted,
        w_erasure=w_erasure,
        q_total=w_extracted + w_erasure,
        delta_S_system=delta_S_system,
        delta_S_bath=-delta_S_system,
        delta_S_total=0.0,
        info_bits=info_bits,
        generalized_entropy=delta_S_system / LN2 - info_bits,
    )
    logger.debug(f"Szilard cycle at T={T}: {ledger}")
    return ledger


def gibbs_state(spec):
    """omega = exp(-H/T) / Z"""
    energies, _ = cmatrix.hermitian_eig(spec.hamiltonian.matrix)
    ground = float(energies[-1])
    # shifting by the ground energy keeps exp() finite at low temperature
    weights = cmatrix.mat_func(spec.hamiltonian.matrix, lambda e: math.exp(-(e - ground) / spec.temperature))
    return DensityOperator(weights / np.trace(weights).real, spec.hamiltonian.dims)


def erasure_hamiltonian(rho, T, support=False):
    """
    Hamiltonian whose thermal state at temperature T is rho

    H = -T ln(rho) shifted so its lowest eigenvalue is 0. A rank-deficient rho needs
    support=True: levels outside the support then get the finite energy T ln(max/1e-12),
    so the thermal state matches rho to about 1e-12 per level.
    """
    if not T > 0:
        raise DomainError(f"Temperature must be positive, got {T}")
    values, _ = cmatrix.hermitian_eig(rho.matrix)
    largest = float(values[0])

    def _energy(value):
        if value <= cmatrix.LOG_CUTOFF:
            if not support:
                raise DomainError(
                    f"rho has eigenvalue {value:.3e}; pass support=True to erase on its support only"
                )
            value = cmatrix.LOG_CUTOFF
        return T * math.log(largest / value)

    hamiltonian = cmatrix.mat_func(rho.matrix, _energy)
    return Observable((hamiltonian + hamiltonian.conj().T) / 2, rho.dims)


def matched_spec(rho, T=1.0, support=False):
    """Heat-bath spec whose equilibrium state is rho"""
    return ThermalSpec(erasure_hamiltonian(rho, T, support=support), T)


def lubkin_ledger(rho, spec):
    """
    Entropy ledger for erasing rho by letting it thermalize into omega = gibbs_state(spec)

    System: k ln2 S(omega). Bath: -tr((omega - rho) H) / T. Total: -k tr(rho ln omega).
    The erasure work reported is the Landauer cost -T * delta_S_total.
    """
    omega = gibbs_state(spec)
    T = spec.temperature
    delta_S_system = LN2 * von_neumann(omega)
    delta_U = float(np.trace((omega.matrix - rho.matrix) @ spec.hamiltonian.matrix).real)
    delta_S_bath = -delta_U / T
    delta_S_total = erasure_cross_term(rho, omega)
    info_bits = von_neumann(rho)
    ledger = WorkLedger(
        w_extracted=0.0,
        w_erasure=-T * delta_S_total,
        q_total=-T * delta_S_total,
        delta_S_system=delta_S_system,
        delta_S_bath=delta_S_bath,
        delta_S_total=delta_S_total,
        info_bits=info_bits,
        generalized_entropy=delta_S_total / LN2 - info_bits,
    )
    logger.debug(f"Lubkin erasure at T={T}: total entropy {delta_S_total:.12g}")
    return ledger


def optimal_erasure_entropy(rho):
    """Landauer minimum k ln2 S(rho), reached when the bath is matched to rho"""
    return LN2 * von_neumann(rho)


def thermal_grid_scan(rho, hamiltonian, temperatures):
    """Lubkin ledgers for a fixed Hamiltonian over a list of bath temperatures"""
    return [(T, lubkin_ledger(rho, ThermalSpec(hamiltonian, T))) for T in temperatures]

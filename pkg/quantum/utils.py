"""
Payload builders shared by the HTTP views and the qit management command.
"""
import numpy as np

from .entropy import shannon, von_neumann
from .erasure import ThermalSpec, lubkin_ledger, matched_spec, optimal_erasure_entropy
from .holevo import computational_basis, holevo_bound, measurement_mutual_info
from .qstate import DensityOperator, Observable, density_from_ensemble, density_matrix, purity


def entropy_payload(ensemble):
    """
    Args:
        ensemble: Ensemble

    Returns:
        dict: von Neumann entropy and purity of the mixture, Shannon entropy of the weights
    """
    rho = density_from_ensemble(ensemble)
    return {
        'von_neumann_bits': von_neumann(rho),
        'purity': purity(rho),
        'shannon_weights_bits': shannon(ensemble.weights),
    }


def holevo_payload(ensemble):
    """
    Holevo quantity as the difference of the two erasure steps

    ds1 erases the letters' own mixedness (sum_i p_i S(rho_i)), ds2 the whole average
    state; fixed_basis_mi is what a computational-basis measurement actually learns.
    """
    rho = density_from_ensemble(ensemble)
    ds1 = sum(
        p * von_neumann(DensityOperator(density_matrix(state), state.dims))
        for p, state in ensemble.items if p > 0
    )
    return {
        'holevo_bits': holevo_bound(ensemble),
        'ds1': ds1,
        'ds2': von_neumann(rho),
        'fixed_basis_mi': measurement_mutual_info(ensemble, computational_basis(rho.dim)),
    }


def erasure_payload(ensemble, temperature=1.0, match=False, support=False, k=1.0):
    """
    Erase the ensemble's average state by thermalization at `temperature`

    With match the bath Hamiltonian is tuned so its thermal state is rho;
    otherwise the Hamiltonian is flat and rho relaxes to the maximally mixed state.
    """
    rho = density_from_ensemble(ensemble)
    if match:
        spec = matched_spec(rho, temperature, support=support)
    else:
        spec = ThermalSpec(Observable(np.zeros((rho.dim, rho.dim)), rho.dims), temperature)
    ledger = lubkin_ledger(rho, spec).scaled(k)
    return {
        'temperature': temperature,
        'matched': match,
        'ledger': ledger.as_dict(),
        'landauer_minimum': k * optimal_erasure_entropy(rho),
    }

"""
Registry of reference values: each check recomputes one published number.

A check function receives the run's numpy Generator (checks that need no
randomness ignore it) and returns the computed value as a float. Matrix
results are reported as their max elementwise deviation from the expected
matrix, against an expected value of 0.
"""
import math
from dataclasses import dataclass

import numpy as np

from quantum import cmatrix, sampling
from quantum.classical_info import (
    bsc_residual_error, bsc_simulate, build_codebook, binomial_sigma, channel_capacity,
    compression_bits, error_pattern_bits, exact_typical_set, repetition_decode,
    string_probabilities, typical_count,
)
from quantum.entangle import (
    PolarizationBasis, anticorrelation_probs, classically_correlated_state, entangling_demo,
    entanglement_entropy, maximally_correlated_state, no_cloning_demo, procrustean_distill,
)
from quantum.entropy import LN2, binary_entropy, boltzmann, erasure_cross_term, shannon, von_neumann
from quantum.erasure import lubkin_ledger, matched_spec, szilard_cycle
from quantum.holevo import holevo_bound
from quantum.qcompress import (
    asymptotic_rate, block_success_prob, build_scheme, compress, decompress, diagonalize_source,
    fidelity, landauer_rate_bound, source_from_probability, typical_strings,
)
from quantum.qstate import (
    Ensemble, Observable, PureState, basis_state, density_from_ensemble, evolve, measure_prob, schmidt_rank,
)

SECTIONS = ('entropy', 'classical', 'quantum', 'erasure', 'holevo', 'qcompress', 'entangle')

SQRT_HALF = 1 / math.sqrt(2)
SIMULATION_TRIALS = 100_000


@dataclass(frozen=True)
class Check:
    id: str
    section: str
    description: str
    paper_value: float
    tolerance: float
    compute: object
    note: str = ''


REGISTRY = []


def check(check_id, description, paper_value, tolerance, note=''):
    section = check_id.split('.', 1)[0]
    if section not in SECTIONS:
        raise ValueError(f"Unknown report section {section!r}")

    def register(compute):
        REGISTRY.append(Check(check_id, section, description, float(paper_value), float(tolerance), compute, note))
        return compute

    return register


def _deviation(computed, expected):
    return cmatrix.max_deviation(np.asarray(computed), np.asarray(expected, dtype=np.complex128))


def _up():
    return PureState([1, 0])


def _diagonal():
    return PureState([SQRT_HALF, SQRT_HALF])


def _maxent():
    return PureState.from_amplitudes([1, 0, 0, 1], (2, 2))


def _no_cloning_ensemble():
    return Ensemble(((0.5, _up()), (0.5, _diagonal())))


def _oven_ensemble():
    psi_1 = PureState.from_amplitudes([2, 1])
    psi_0 = PureState.from_amplitudes([1, 1])
    return Ensemble(((0.95, psi_1), (0.05, psi_0)))


# quantum mechanics recap

@check('quantum.tensor_product_vector', "|1> (x) |0> is the column vector (0, 0, 1, 0)", 0, 1e-12)
def _tensor_product_vector(rng):
    return _deviation(cmatrix.tensor(basis_state('1').vector, basis_state('0').vector), [0, 0, 1, 0])


@check('quantum.entangled_projector', "Projector on (|00> + |11>)/sqrt(2)", 0, 1e-12)
def _entangled_projector(rng):
    expected = np.array([[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]]) / 2
    return _deviation(cmatrix.projector(_maxent().vector), expected)


@check('quantum.evolution_operator', "exp(-i H t) for H = diag(1, 1, 1, -1), t = pi/2", 0, 1e-9)
def _evolution_operator(rng):
    unitary = cmatrix.mat_exp_unitary(np.diag([1, 1, 1, -1]), math.pi / 2)
    return _deviation(unitary, np.diag([-1j, -1j, -1j, 1j]))


@check('quantum.reduced_maximally_entangled', "Reduced state of the maximally entangled pair is I/2", 0, 1e-12)
def _reduced_maximally_entangled(rng):
    reduced = cmatrix.partial_trace(cmatrix.projector(_maxent().vector), (2, 2), [1])
    return _deviation(reduced, np.eye(2) / 2)


@check('quantum.oven_matrix_is_density', "[[0.785, 0.405], [0.405, 0.215]] is a density matrix", 1, 0)
def _oven_matrix_is_density(rng):
    return float(cmatrix.is_density([[0.785, 0.405], [0.405, 0.215]]))


@check('quantum.oven_density', "Oven ensemble {0.95: psi_1, 0.05: psi_0} gives [[0.785, 0.405], [0.405, 0.215]]", 0, 1e-12)
def _oven_density(rng):
    return _deviation(density_from_ensemble(_oven_ensemble()).matrix, [[0.785, 0.405], [0.405, 0.215]])


@check(
    'quantum.mixed_pair_density',
    "Mixture p0 (|00> + |11>)/sqrt(2) + p1 |00> at p0 = 0.6",
    0, 1e-12,
    note="The printed matrix places the entangled block on |01>, |10>; computed from the stated states",
)
def _mixed_pair_density(rng):
    p0, p1 = 0.6, 0.4
    rho = density_from_ensemble(Ensemble(((p0, _maxent()), (p1, basis_state('00')))))
    expected = np.zeros((4, 4))
    expected[0, 0] = p0 / 2 + p1
    expected[0, 3] = expected[3, 0] = expected[3, 3] = p0 / 2
    return _deviation(rho.matrix, expected)


@check('quantum.joint_outcome_probability', "P(|0>_A and |1>_B) on the maximally entangled pair is 0", 0, 1e-12)
def _joint_outcome_probability(rng):
    projector = cmatrix.tensor(cmatrix.projector(basis_state('0').vector), cmatrix.projector(basis_state('1').vector))
    return measure_prob(_maxent().density(), projector)


@check('quantum.evolved_state', "(1, 1, 1, 1)/2 evolves to (-i/2)(1, 1, 1, -1) at t = pi/2", 0, 1e-9)
def _evolved_state(rng):
    initial = PureState.from_amplitudes([1, 1, 1, 1], (2, 2))
    final = evolve(initial, Observable(np.diag([1, 1, 1, -1]), (2, 2)), math.pi / 2)
    return _deviation(final.vector, -0.5j * np.array([1, 1, 1, -1]))


@check('quantum.maximally_entangled_rank', "(|00> + |11>)/sqrt(2) does not factorize (Schmidt rank 2)", 2, 0)
def _maximally_entangled_rank(rng):
    return schmidt_rank(_maxent())


@check('quantum.evolved_state_rank', "The evolved state is entangled (Schmidt rank 2)", 2, 0)
def _evolved_state_rank(rng):
    initial = PureState.from_amplitudes([1, 1, 1, 1], (2, 2))
    return schmidt_rank(evolve(initial, Observable(np.diag([1, 1, 1, -1]), (2, 2)), math.pi / 2))


# entropy

@check('entropy.shannon_one_eighth', "Information per symbol for p = (1/8, 7/8)", 0.5436, 1e-4)
def _shannon_one_eighth(rng):
    return shannon([1 / 8, 7 / 8])


@check('entropy.shannon_fair_coin', "H(1/2) = 1 bit", 1, 1e-12)
def _shannon_fair_coin(rng):
    return shannon([0.5, 0.5])


@check('entropy.binary_095', "H(0.95)", 0.2864, 1e-4)
def _binary_095(rng):
    return binary_entropy(0.95)


@check('entropy.pure_state', "A pure state has zero von Neumann entropy", 0, 1e-9)
def _pure_state(rng):
    return von_neumann(sampling.random_pure_state(rng, 4).density())


@check('entropy.two_state_mixture', "S of 1/2 |up><up| + 1/2 |psi_1><psi_1|", 0.6008, 1e-4)
def _two_state_mixture(rng):
    return von_neumann(density_from_ensemble(_no_cloning_ensemble()))


@check('entropy.boltzmann_two_states', "Two equally likely states carry k ln 2", LN2, 1e-12)
def _boltzmann_two_states(rng):
    return boltzmann([0.5, 0.5])


@check('entropy.boltzmann_certain', "A system known with certainty has entropy 0", 0, 1e-12)
def _boltzmann_certain(rng):
    return boltzmann([1, 0])


@check('entropy.cross_term_minimum', "-k tr(rho ln omega) at omega = rho minus k ln2 S(rho)", 0, 1e-9)
def _cross_term_minimum(rng):
    rho = sampling.random_density(rng, 3, floor=0.05)
    return erasure_cross_term(rho, rho) - LN2 * von_neumann(rho)


# classical information

@check('classical.typical_count', "Typical messages for N = 8, p1 = 1/8", 8, 0)
def _typical_count(rng):
    return typical_count(8, 1 / 8)


@check('classical.compression_bits', "I = log2 8 = 3 bits label the typical messages", 3, 0)
def _compression_bits(rng):
    return compression_bits(8, 1 / 8).exact


@check('classical.stirling_per_symbol', "N H(p1) / N for N = 8, p1 = 1/8", 0.5436, 1e-4)
def _stirling_per_symbol(rng):
    return compression_bits(8, 1 / 8).stirling / 8


@check('classical.majority_vote', "101 decodes to 1", 1, 0)
def _majority_vote(rng):
    return repetition_decode('101')


@check(
    'classical.codebook_contains_typical_set',
    "Strings with a single 1 held by the codebook covering their mass",
    8, 0,
    note="Probability ordering also admits the all-zeros string, giving 9 entries",
)
def _codebook_contains_typical_set(rng):
    typical = exact_typical_set(8, 1 / 8)
    probabilities = string_probabilities(8, 1 / 8)
    coverage = probabilities[0] + sum(probabilities[int(''.join(map(str, s)), 2)] for s in typical)
    codebook = build_codebook(8, 1 / 8, coverage)
    return len(set(typical) & set(codebook.typical))


@check('classical.capacity_identity', "N_C (1 - H(q)) + N_C H(q) - N_C over q in {0, 0.01, 0.11, 0.5}", 0, 1e-12)
def _capacity_identity(rng):
    n_c = 1000
    return max(abs(channel_capacity(n_c, q) + error_pattern_bits(n_c, q) - n_c) for q in (0, 0.01, 0.11, 0.5))


@check(
    'classical.double_error_rate',
    "Probability of a given double error at q = 0.01 (0.01%)",
    1e-4, 1e-12,
    note="Counts one double-error pattern; the exact residual error is classical.residual_error",
)
def _double_error_rate(rng):
    return 0.01 ** 2


@check('classical.residual_error', "Exact majority-decoding failure for n = 3, q = 0.01", 2.98e-4, 1e-7)
def _residual_error(rng):
    return bsc_residual_error(3, 0.01)


@check(
    'classical.residual_error_simulated',
    "Monte Carlo majority-decoding failure for n = 3, q = 0.01",
    bsc_residual_error(3, 0.01), 4 * binomial_sigma(bsc_residual_error(3, 0.01), SIMULATION_TRIALS),
    note="Tolerance is four binomial standard deviations",
)
def _residual_error_simulated(rng):
    return bsc_simulate(3, 0.01, SIMULATION_TRIALS, int(rng.integers(2 ** 63)))


# erasure

@check('erasure.szilard_work', "Szilard engine extracts kT ln 2 at T = 1", LN2, 1e-12)
def _szilard_work(rng):
    return szilard_cycle(1.0).w_extracted


@check('erasure.szilard_net_heat', "Net heat over the cycle including erasure is 0", 0, 1e-12)
def _szilard_net_heat(rng):
    return szilard_cycle(1.0).q_total


@check('erasure.matched_minimum', "Erasure with the bath matched to rho minus ln2 S(rho)", 0, 1e-9)
def _matched_minimum(rng):
    rho = density_from_ensemble(_oven_ensemble())
    return lubkin_ledger(rho, matched_spec(rho)).delta_S_total - LN2 * von_neumann(rho)


# holevo

@check('holevo.two_state_bound', "Holevo bound of {1/2: |up>, 1/2: (|up> + |down>)/sqrt(2)}", 0.6008, 1e-4)
def _two_state_bound(rng):
    return holevo_bound(_no_cloning_ensemble())


# schumacher compression

def _dominant_source():
    return source_from_probability(0.95)


def _likely_strings():
    strings = [(0,) * 7]
    for position in range(6, -1, -1):
        bits = [0] * 7
        bits[position] = 1
        strings.append(tuple(bits))
    return strings


@check('qcompress.source_eigenprobability', "Source {0.95: |0>, 0.05: |1>} has p0 = 0.95", 0.95, 1e-12)
def _source_eigenprobability(rng):
    return diagonalize_source(Ensemble(((0.95, basis_state('0')), (0.05, basis_state('1'))))).p0


@check('qcompress.typical_strings', "The 8 likely 7-qubit strings: all zeros and the single-1 strings", 8, 0)
def _typical_strings(rng):
    return sum(a == b for a, b in zip(typical_strings(_dominant_source(), 7, 8), _likely_strings()))


@check('qcompress.scheme_mappings', "Likely string k is mapped to |0000>|k>", 8, 0)
def _scheme_mappings(rng):
    scheme = build_scheme(_dominant_source(), 7, 3)
    return sum(
        int(scheme.perm[int(''.join(map(str, bits)), 2)] == k) for k, bits in enumerate(_likely_strings())
    )


@check('qcompress.two_term_round_trip', "alpha|0000000> + beta|0000001> survives compression to 3 qubits", 1, 1e-9)
def _two_term_round_trip(rng):
    scheme = build_scheme(_dominant_source(), 7, 3)
    amplitudes = np.zeros(2 ** 7, dtype=np.complex128)
    amplitudes[0], amplitudes[1] = 0.6, 0.8j
    psi = PureState(amplitudes, (2,) * 7)
    compressed, success_prob = compress(psi, scheme)
    return min(success_prob, fidelity(psi, decompress(compressed, scheme)))


@check(
    'qcompress.likely_probability',
    "p_likely = 0.95^7 + 7 (0.95^6)(0.05)",
    0.955, 1e-3,
    note="The printed value truncates 0.95562",
)
def _likely_probability(rng):
    return block_success_prob(_dominant_source(), 7, 3)


@check('qcompress.asymptotic_rate', "Qubits per source qubit for long blocks, H(0.95)", 0.2864, 1e-4)
def _asymptotic_rate(rng):
    return asymptotic_rate(_dominant_source())


@check('qcompress.landauer_bound', "Compression rate bound from erasure, S(rho)", 0.2864, 1e-4)
def _landauer_bound(rng):
    return landauer_rate_bound(_dominant_source())


# entanglement

@check('entangle.classical_anticorrelation', "Anticorrelation of the classical mixture at 45 degrees", 0.25, 1e-12)
def _classical_anticorrelation(rng):
    return anticorrelation_probs(classically_correlated_state(), PolarizationBasis())[0]


@check('entangle.quantum_anticorrelation', "Anticorrelation of the entangled pair at 45 degrees", 0, 1e-12)
def _quantum_anticorrelation(rng):
    return anticorrelation_probs(maximally_correlated_state(), PolarizationBasis())[0]


@check('entangle.demo_final_state', "Entangling evolution ends in (-i/2)(1, 1, 1, -1)", 0, 1e-9)
def _demo_final_state(rng):
    return _deviation(entangling_demo().final.vector, -0.5j * np.array([1, 1, 1, -1]))


@check('entangle.demo_final_rank', "Entangling evolution ends with Schmidt rank 2", 2, 0)
def _demo_final_rank(rng):
    return entangling_demo().schmidt_rank_final


@check('entangle.no_cloning_one_copy', "Entropy of one copy of the two-state source", 0.6008, 1e-4)
def _no_cloning_one_copy(rng):
    return no_cloning_demo(1)


@check('entangle.no_cloning_two_copies', "Entropy of two copies of the two-state source", 0.8113, 1e-4)
def _no_cloning_two_copies(rng):
    return no_cloning_demo(2)


@check('entangle.distillation_probability', "Success probability 2 beta^2 at alpha^2 = 0.8", 0.4, 1e-9)
def _distillation_probability(rng):
    success, _ = procrustean_distill(math.sqrt(0.8), math.sqrt(0.2))
    return success.probability


@check('entangle.ebit', "(|10> + |01>)/sqrt(2) carries one ebit", 1, 1e-9)
def _ebit(rng):
    return entanglement_entropy(PureState.from_amplitudes([0, 1, 1, 0], (2, 2)))


def checks_for(sections=None):
    """Registered checks, optionally restricted to some sections, ordered by id"""
    if sections:
        unknown = sorted(set(sections) - set(SECTIONS))
        if unknown:
            raise ValueError(f"Unknown report sections: {', '.join(unknown)}")
    selected = [c for c in REGISTRY if not sections or c.section in sections]
    return sorted(selected, key=lambda c: c.id)

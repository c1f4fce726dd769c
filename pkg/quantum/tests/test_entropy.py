import math

import numpy as np
from django.test import SimpleTestCase

from quantum import sampling
from quantum.entropy import (
    LN2, EntropyValue, binary_entropy, bits_to_thermo, boltzmann, erasure_cross_term, joint_entropy,
    mutual_information, shannon, spectrum, surprise, thermo_to_bits, von_neumann,
)
from quantum.exceptions import ContractError, DomainError, ShapeError
from quantum.qstate import DensityOperator, Ensemble, PureState, density_from_ensemble


def two_state_mixture():
    up = PureState([1, 0])
    diagonal = PureState.from_amplitudes([1, 1])
    return density_from_ensemble(Ensemble(((0.5, up), (0.5, diagonal))))


class ShannonTests(SimpleTestCase):
    def test_one_eighth(self):
        self.assertAlmostEqual(shannon([1 / 8, 7 / 8]), 0.5436, delta=1e-4)

    def test_fair_coin(self):
        self.assertAlmostEqual(shannon([0.5, 0.5]), 1.0, delta=1e-12)

    def test_certain_outcome(self):
        self.assertEqual(shannon([1, 0]), 0.0)

    def test_bounds(self):
        rng = sampling.rng_for(20)
        for size in range(2, 9):
            p = sampling.random_distribution(rng, size)
            self.assertGreaterEqual(shannon(p), 0.0)
            self.assertLessEqual(shannon(p), math.log2(size))

    def test_not_a_distribution(self):
        with self.assertRaisesMessage(ContractError, 'probabilities sum to 0.9'):
            shannon([0.5, 0.4])
        with self.assertRaises(ContractError):
            shannon([1.5, -0.5])

    def test_binary_entropy(self):
        self.assertAlmostEqual(binary_entropy(0.95), 0.2864, delta=1e-4)
        self.assertEqual(binary_entropy(0), 0.0)
        with self.assertRaises(DomainError):
            binary_entropy(1.2)

    def test_surprise(self):
        self.assertEqual(surprise(0.125), 3.0)
        with self.assertRaises(DomainError):
            surprise(0)


class ThermodynamicEntropyTests(SimpleTestCase):
    def test_two_equally_likely_states(self):
        self.assertAlmostEqual(boltzmann([0.5, 0.5]), LN2, delta=1e-12)

    def test_known_state(self):
        self.assertEqual(boltzmann([1, 0]), 0.0)

    def test_unit_conversion_round_trip(self):
        self.assertAlmostEqual(thermo_to_bits(bits_to_thermo(1.7, 1.38e-23), 1.38e-23), 1.7, delta=1e-12)
        self.assertAlmostEqual(EntropyValue.from_bits(1.0).thermo, LN2)


class MutualInformationTests(SimpleTestCase):
    def test_perfectly_correlated_bits(self):
        self.assertAlmostEqual(mutual_information([[0.5, 0], [0, 0.5]]), 1.0, delta=1e-12)

    def test_independent_variables(self):
        joint = np.outer([0.3, 0.7], [0.6, 0.4])
        self.assertAlmostEqual(mutual_information(joint), 0.0, delta=1e-12)
        self.assertAlmostEqual(joint_entropy(joint), shannon([0.3, 0.7]) + shannon([0.6, 0.4]), delta=1e-12)

    def test_needs_two_dimensional_table(self):
        with self.assertRaises(ShapeError):
            mutual_information([0.5, 0.5])


class VonNeumannTests(SimpleTestCase):
    def test_pure_states_have_zero_entropy(self):
        rng = sampling.rng_for(21)
        for dim in (2, 3, 4):
            self.assertAlmostEqual(von_neumann(sampling.random_pure_state(rng, dim).density()), 0.0, delta=1e-9)

    def test_maximally_mixed_qubit(self):
        self.assertAlmostEqual(von_neumann(DensityOperator(np.eye(2) / 2)), 1.0, delta=1e-12)

    def test_two_state_mixture(self):
        self.assertAlmostEqual(von_neumann(two_state_mixture()), 0.6008, delta=1e-4)

    def test_diagonal_state_matches_shannon(self):
        self.assertAlmostEqual(von_neumann(DensityOperator(np.diag([0.95, 0.05]))), binary_entropy(0.95), delta=1e-12)

    def test_unitary_invariance(self):
        rng = sampling.rng_for(22)
        for _ in range(20):
            rho = sampling.random_density(rng, 4)
            unitary = sampling.random_unitary(rng, 4)
            rotated = DensityOperator(unitary @ rho.matrix @ unitary.conj().T)
            self.assertAlmostEqual(von_neumann(rotated), von_neumann(rho), delta=1e-8)

    def test_spectrum_clamps_rounding(self):
        values = spectrum(np.diag([1 + 1e-10, -1e-10]))
        self.assertGreaterEqual(values.min(), 0.0)

    def test_spectrum_rejects_negative_states(self):
        with self.assertRaises(ContractError):
            spectrum(np.diag([1.1, -0.1]))


class CrossTermTests(SimpleTestCase):
    def test_equality_at_omega_equal_rho(self):
        rho = two_state_mixture()
        self.assertAlmostEqual(erasure_cross_term(rho, rho), LN2 * von_neumann(rho), delta=1e-9)

    def test_klein_inequality(self):
        rng = sampling.rng_for(23)
        for index in range(1000):
            dim = 2 + index % 2
            rho = sampling.random_density(rng, dim)
            omega = sampling.random_density(rng, dim, floor=0.01)
            self.assertGreaterEqual(erasure_cross_term(rho, omega) - LN2 * von_neumann(rho), -1e-9)

    def test_omega_must_cover_rho(self):
        rho = DensityOperator(np.eye(2) / 2)
        omega = DensityOperator(np.diag([1.0, 0.0]))
        with self.assertRaises(DomainError):
            erasure_cross_term(rho, omega)

    def test_shapes_must_match(self):
        with self.assertRaises(ShapeError):
            erasure_cross_term(np.eye(2) / 2, np.eye(3) / 3)


class EntropyProperties(SimpleTestCase):
    def test_nearly_hermitian_density_operator(self):
        rho = DensityOperator([[0.5, 0.25], [0.25 + 5e-10, 0.5]])
        self.assertAlmostEqual(von_neumann(rho), binary_entropy(0.25), delta=1e-9)

    def test_shannon_is_concave(self):
        rng = sampling.rng_for(23)
        for _ in range(1000):
            size = int(rng.integers(2, 9))
            p = sampling.random_distribution(rng, size)
            q = sampling.random_distribution(rng, size)
            weight = rng.uniform()
            mixed = weight * p + (1 - weight) * q
            self.assertGreaterEqual(shannon(mixed), weight * shannon(p) + (1 - weight) * shannon(q) - 1e-12)

    def test_pure_mixture_entropy_is_below_weight_entropy(self):
        rng = sampling.rng_for(24)
        for _ in range(300):
            members = int(rng.integers(1, 6))
            ensemble = sampling.random_ensemble(rng, members, int(rng.integers(2, 5)))
            self.assertLessEqual(von_neumann(density_from_ensemble(ensemble)), shannon(ensemble.weights) + 1e-9)

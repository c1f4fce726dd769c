import math

import numpy as np
from django.test import SimpleTestCase

from quantum import cmatrix, sampling
from quantum.exceptions import ContractError, NumericalError, ShapeError
from quantum.qstate import (
    DensityOperator, Ensemble, Observable, PureState, basis_state, density_from_ensemble, evolve,
    expectation, is_product, measure_prob, measurement_distribution, purity, reduced, schmidt_rank,
)


def oven_ensemble():
    psi_1 = PureState.from_amplitudes([2, 1])
    psi_0 = PureState.from_amplitudes([1, 1])
    return Ensemble(((0.95, psi_1), (0.05, psi_0)))


def maximally_entangled():
    return PureState.from_amplitudes([1, 0, 0, 1], (2, 2))


class StateTypeTests(SimpleTestCase):
    def test_pure_state_needs_unit_norm(self):
        with self.assertRaises(ContractError):
            PureState([1, 1])

    def test_from_amplitudes_normalizes(self):
        psi = PureState.from_amplitudes([3, 4j])
        self.assertAlmostEqual(np.vdot(psi.vector, psi.vector).real, 1.0)

    def test_state_vector_is_read_only(self):
        psi = basis_state('0')
        with self.assertRaises(ValueError):
            psi.vector[0] = 0

    def test_dims_must_multiply_to_size(self):
        with self.assertRaises(ShapeError):
            PureState([1, 0, 0, 0], (2, 3))

    def test_observable_must_be_hermitian(self):
        with self.assertRaises(ContractError):
            Observable([[0, 1], [0, 0]])

    def test_ensemble_probabilities_must_sum_to_one(self):
        with self.assertRaisesMessage(ContractError, 'probabilities sum to 0.9'):
            Ensemble(((0.5, basis_state('0')), (0.4, basis_state('1'))))

    def test_ensemble_members_share_dims(self):
        with self.assertRaises(ShapeError):
            Ensemble(((0.5, basis_state('0')), (0.5, basis_state('00'))))

    def test_basis_state_index_convention(self):
        np.testing.assert_array_equal(basis_state('10').vector, [0, 0, 1, 0])
        self.assertEqual(basis_state([1, 2], (2, 3)).vector.argmax(), 5)


class DensityTests(SimpleTestCase):
    def test_oven_density_matrix(self):
        rho = density_from_ensemble(oven_ensemble())
        self.assertLessEqual(cmatrix.max_deviation(rho.matrix, [[0.785, 0.405], [0.405, 0.215]]), 1e-12)

    def test_single_member_is_its_projector(self):
        psi = PureState.from_amplitudes([1, 1j])
        rho = density_from_ensemble(Ensemble(((1.0, psi),)))
        self.assertLessEqual(cmatrix.max_deviation(rho.matrix, cmatrix.projector(psi.vector)), 1e-15)

    def test_mixture_of_entangled_and_product_pair(self):
        p0, p1 = 0.3, 0.7
        rho = density_from_ensemble(Ensemble(((p0, maximally_entangled()), (p1, basis_state('00')))))
        expected = np.zeros((4, 4))
        expected[0, 0] = p0 / 2 + p1
        expected[0, 3] = expected[3, 0] = expected[3, 3] = p0 / 2
        self.assertLessEqual(cmatrix.max_deviation(rho.matrix, expected), 1e-12)

    def test_purity(self):
        self.assertAlmostEqual(purity(PureState.from_amplitudes([1, 1]).density()), 1.0, delta=1e-12)
        self.assertAlmostEqual(purity(DensityOperator(np.eye(2) / 2)), 0.5, delta=1e-12)


class MeasurementTests(SimpleTestCase):
    def test_identity_expectation_is_one(self):
        rho = density_from_ensemble(oven_ensemble())
        self.assertAlmostEqual(expectation(Observable(np.eye(2)), rho), 1.0, delta=1e-12)

    def test_eigenstate_expectation(self):
        self.assertAlmostEqual(expectation(Observable(np.diag([2.5, -1])), basis_state('0').density()), 2.5)

    def test_sigma_z_on_oven_state(self):
        rho = density_from_ensemble(oven_ensemble())
        self.assertAlmostEqual(expectation(Observable(np.diag([1, -1])), rho), 0.570, delta=1e-12)

    def test_expectation_dims_must_match(self):
        with self.assertRaises(ShapeError):
            expectation(Observable(np.eye(4), (2, 2)), basis_state('0').density())

    def test_anticorrelated_outcome_on_entangled_pair(self):
        projector = cmatrix.tensor(np.diag([1, 0]), np.diag([0, 1]))
        self.assertAlmostEqual(measure_prob(maximally_entangled().density(), projector), 0.0, delta=1e-12)

    def test_full_space_projector(self):
        self.assertEqual(measure_prob(basis_state('1').density(), np.eye(2)), 1.0)

    def test_probability_of_one_on_psi_0(self):
        psi_0 = PureState.from_amplitudes([1, 1])
        self.assertAlmostEqual(measure_prob(psi_0.density(), np.diag([0, 1])), 0.5, delta=1e-12)

    def test_rejects_non_projector(self):
        with self.assertRaises(ContractError):
            measure_prob(basis_state('0').density(), np.diag([0.5, 0.5]))

    def test_distribution_needs_complete_measurement(self):
        with self.assertRaises(ContractError):
            measurement_distribution(basis_state('0').density(), [np.diag([1, 0])])

    def test_distribution_sums_to_one(self):
        rng = sampling.rng_for(10)
        rho = sampling.random_density(rng, 3)
        probabilities = measurement_distribution(rho, sampling.random_projective_basis(rng, 3))
        self.assertAlmostEqual(sum(probabilities), 1.0, delta=1e-9)


class EvolutionTests(SimpleTestCase):
    def setUp(self):
        self.hamiltonian = Observable(np.diag([1, 1, 1, -1]), (2, 2))
        self.initial = PureState.from_amplitudes([1, 1, 1, 1], (2, 2))

    def test_entangling_evolution(self):
        final = evolve(self.initial, self.hamiltonian, math.pi / 2)
        self.assertLessEqual(cmatrix.max_deviation(final.vector, -0.5j * np.array([1, 1, 1, -1])), 1e-9)

    def test_zero_time_is_identity(self):
        final = evolve(self.initial, self.hamiltonian, 0.0)
        self.assertLessEqual(cmatrix.max_deviation(final.vector, self.initial.vector), 1e-12)

    def test_group_property(self):
        rng = sampling.rng_for(11)
        for _ in range(10):
            psi = sampling.random_pure_state(rng, 3)
            hamiltonian = sampling.random_observable(rng, 3)
            t1, t2 = rng.uniform(0, 2, size=2)
            stepwise = evolve(evolve(psi, hamiltonian, t1), hamiltonian, t2)
            direct = evolve(psi, hamiltonian, t1 + t2)
            self.assertLessEqual(cmatrix.max_deviation(stepwise.vector, direct.vector), 1e-9)

    def test_hbar_scales_time(self):
        slow = evolve(self.initial, self.hamiltonian, math.pi, hbar=2.0)
        fast = evolve(self.initial, self.hamiltonian, math.pi / 2)
        self.assertLessEqual(cmatrix.max_deviation(slow.vector, fast.vector), 1e-9)


class EntanglementStructureTests(SimpleTestCase):
    def test_maximally_entangled_rank(self):
        self.assertEqual(schmidt_rank(maximally_entangled()), 2)
        self.assertFalse(is_product(maximally_entangled()))

    def test_product_rank(self):
        self.assertEqual(schmidt_rank(PureState.from_amplitudes([1, 1, 1, 1], (2, 2))), 1)

    def test_evolved_state_is_entangled(self):
        final = evolve(PureState.from_amplitudes([1, 1, 1, 1], (2, 2)), Observable(np.diag([1, 1, 1, -1]), (2, 2)), math.pi / 2)
        self.assertEqual(schmidt_rank(final), 2)

    def test_schmidt_rank_needs_two_subsystems(self):
        with self.assertRaises(ShapeError):
            schmidt_rank(basis_state('000'))

    def test_reduced_state(self):
        rho_b = reduced(maximally_entangled().density(), [1])
        self.assertEqual(rho_b.dims, (2,))
        self.assertLessEqual(cmatrix.max_deviation(rho_b.matrix, np.eye(2) / 2), 1e-12)

    def test_large_imaginary_expectation_is_rejected(self):
        # a non-Hermitian operator sneaked past validation
        observable = Observable(np.eye(2))
        object.__setattr__(observable, 'matrix', np.array([[0, 1j], [0, 0]]))
        with self.assertRaises(NumericalError):
            expectation(observable, PureState.from_amplitudes([1, 1]).density())


class HermitianPartTests(SimpleTestCase):
    def test_density_operator_keeps_hermitian_part(self):
        rho = DensityOperator([[0.5, 0.25], [0.25 + 5e-10, 0.5]])
        self.assertEqual(cmatrix.max_deviation(rho.matrix, rho.matrix.conj().T), 0.0)
        values, _ = cmatrix.hermitian_eig(rho.matrix)
        np.testing.assert_allclose(values, [0.75, 0.25], atol=1e-9)

    def test_observable_keeps_hermitian_part(self):
        observable = Observable([[1, 0.5j], [-0.5j + 5e-10, -1]])
        self.assertEqual(cmatrix.max_deviation(observable.matrix, observable.matrix.conj().T), 0.0)


class StateProperties(SimpleTestCase):
    def test_ensemble_average_is_a_density_operator(self):
        rng = sampling.rng_for(12)
        for trial in range(1000):
            members = int(rng.integers(1, 5))
            dim = int(rng.integers(2, 5))
            ensemble = sampling.random_ensemble(rng, members, dim, mixed=bool(trial % 2))
            rho = density_from_ensemble(ensemble)
            self.assertTrue(cmatrix.is_density(rho.matrix))

    def test_expectation_is_weighted_outcome_probabilities(self):
        rng = sampling.rng_for(13)
        for _ in range(100):
            dim = int(rng.integers(2, 5))
            rho = sampling.random_density(rng, dim)
            eigenvalues = rng.normal(size=dim)
            projectors = sampling.random_projective_basis(rng, dim)
            observable = Observable(sum(e * p for e, p in zip(eigenvalues, projectors)))
            weighted = sum(e * measure_prob(rho, p) for e, p in zip(eigenvalues, projectors))
            self.assertAlmostEqual(expectation(observable, rho), weighted, delta=1e-9)

    def test_local_hamiltonians_keep_product_states(self):
        rng = sampling.rng_for(14)
        identity = np.eye(2)
        for _ in range(50):
            a = sampling.random_hermitian(rng, 2)
            b = sampling.random_hermitian(rng, 2)
            hamiltonian = Observable(cmatrix.tensor(a, identity) + cmatrix.tensor(identity, b), (2, 2))
            first = sampling.random_pure_state(rng, 2).vector
            second = sampling.random_pure_state(rng, 2).vector
            psi = PureState(cmatrix.tensor(first, second), (2, 2))
            final = evolve(psi, hamiltonian, float(rng.uniform(0, 5)))
            self.assertEqual(schmidt_rank(final), 1)

    def test_entangled_pairs_have_mixed_halves(self):
        rng = sampling.rng_for(15)
        self.assertAlmostEqual(purity(reduced(maximally_entangled().density(), [0])), 0.5, delta=1e-12)
        for _ in range(50):
            psi = sampling.random_pure_state(rng, 4, (2, 2))
            if schmidt_rank(psi) == 2:
                self.assertLess(purity(reduced(psi.density(), [0])), 1.0)

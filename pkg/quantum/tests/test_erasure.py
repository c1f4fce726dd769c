import math

import numpy as np
from django.test import SimpleTestCase

from quantum import cmatrix, sampling
from quantum.entropy import LN2, von_neumann
from quantum.erasure import (
    ThermalSpec, WorkLedger, erasure_hamiltonian, gibbs_state, lubkin_ledger, matched_spec,
    optimal_erasure_entropy, szilard_cycle, thermal_grid_scan,
)
from quantum.exceptions import DomainError, NumericalError
from quantum.qstate import DensityOperator, Ensemble, Observable, PureState, density_from_ensemble


class SzilardCycleTests(SimpleTestCase):
    def test_work_extracted_is_kt_ln2(self):
        ledger = szilard_cycle(1.0)
        self.assertAlmostEqual(ledger.w_extracted, LN2, delta=1e-12)
        self.assertAlmostEqual(ledger.w_erasure, -LN2, delta=1e-12)

    def test_cycle_balances(self):
        for T in (0.1, 1.0, 300.0):
            ledger = szilard_cycle(T)
            self.assertAlmostEqual(ledger.q_total, 0.0, delta=1e-12 * T)
            self.assertEqual(ledger.delta_S_total, 0.0)
            self.assertAlmostEqual(ledger.generalized_entropy, 0.0, delta=1e-12)

    def test_scaling_by_boltzmann_constant(self):
        k = 1.380649e-23
        ledger = szilard_cycle(300.0).scaled(k)
        self.assertAlmostEqual(ledger.w_extracted / (k * 300.0), LN2, delta=1e-12)
        self.assertEqual(ledger.info_bits, 1.0)

    def test_temperature_must_be_positive(self):
        with self.assertRaises(DomainError):
            szilard_cycle(0)

    def test_unbalanced_ledger_is_rejected(self):
        with self.assertRaises(NumericalError):
            WorkLedger(
                w_extracted=1.0, w_erasure=0.0, q_total=0.0,
                delta_S_system=0.0, delta_S_bath=0.0, delta_S_total=0.0,
                info_bits=0.0, generalized_entropy=0.0,
            )


class ThermalStateTests(SimpleTestCase):
    def test_gibbs_state_of_two_levels(self):
        spec = ThermalSpec(Observable(np.diag([0.0, 1.0])), 1.0)
        omega = gibbs_state(spec)
        z = 1 + math.exp(-1)
        self.assertLessEqual(cmatrix.max_deviation(omega.matrix, np.diag([1 / z, math.exp(-1) / z])), 1e-12)
        self.assertAlmostEqual(spec.partition_function, z, delta=1e-12)

    def test_low_temperature_stays_finite(self):
        omega = gibbs_state(ThermalSpec(Observable(np.diag([0.0, 5.0])), 1e-3))
        self.assertTrue(np.all(np.isfinite(omega.matrix)))
        self.assertAlmostEqual(omega.matrix[0, 0].real, 1.0, delta=1e-12)

    def test_matched_hamiltonian_reproduces_rho(self):
        rng = sampling.rng_for(30)
        for dim in (2, 3, 4):
            rho = sampling.random_density(rng, dim, floor=0.01)
            for T in (0.5, 1.0, 4.0):
                omega = gibbs_state(matched_spec(rho, T))
                self.assertLessEqual(cmatrix.max_deviation(omega.matrix, rho.matrix), 1e-9)

    def test_matched_hamiltonian_ground_energy_is_zero(self):
        rho = DensityOperator(np.diag([0.7, 0.3]))
        energies, _ = cmatrix.hermitian_eig(erasure_hamiltonian(rho, 2.0).matrix)
        self.assertAlmostEqual(energies[-1], 0.0, delta=1e-12)
        self.assertAlmostEqual(energies[0], 2.0 * math.log(0.7 / 0.3), delta=1e-12)

    def test_rank_deficient_rho_needs_support(self):
        rho = DensityOperator(np.diag([1.0, 0.0]))
        with self.assertRaises(DomainError):
            erasure_hamiltonian(rho, 1.0)
        omega = gibbs_state(matched_spec(rho, 1.0, support=True))
        self.assertLessEqual(cmatrix.max_deviation(omega.matrix, rho.matrix), 1e-11)

    def test_temperature_must_be_positive(self):
        with self.assertRaises(DomainError):
            ThermalSpec(Observable(np.eye(2)), -1.0)


class LubkinLedgerTests(SimpleTestCase):
    def setUp(self):
        up = PureState([1, 0])
        diagonal = PureState.from_amplitudes([1, 1])
        self.rho = density_from_ensemble(Ensemble(((0.5, up), (0.5, diagonal))))

    def test_matched_bath_reaches_landauer_minimum(self):
        ledger = lubkin_ledger(self.rho, matched_spec(self.rho, 1.0))
        self.assertAlmostEqual(ledger.delta_S_total, optimal_erasure_entropy(self.rho), delta=1e-9)
        self.assertAlmostEqual(ledger.generalized_entropy, 0.0, delta=1e-9)
        self.assertAlmostEqual(ledger.info_bits, 0.6008, delta=1e-4)

    def test_system_and_bath_add_up(self):
        spec = ThermalSpec(Observable(np.diag([0.0, 0.0])), 1.0)
        ledger = lubkin_ledger(self.rho, spec)
        self.assertAlmostEqual(ledger.delta_S_system, LN2, delta=1e-12)
        self.assertAlmostEqual(ledger.delta_S_system + ledger.delta_S_bath, ledger.delta_S_total, delta=1e-9)

    def test_work_is_landauer_cost(self):
        spec = matched_spec(self.rho, 2.0)
        ledger = lubkin_ledger(self.rho, spec)
        self.assertAlmostEqual(ledger.w_erasure, -2.0 * ledger.delta_S_total, delta=1e-12)

    def test_unmatched_baths_cost_more(self):
        rng = sampling.rng_for(31)
        for _ in range(50):
            rho = sampling.random_density(rng, 3, floor=0.01)
            spec = ThermalSpec(sampling.random_observable(rng, 3), float(rng.uniform(0.5, 5)))
            ledger = lubkin_ledger(rho, spec)
            self.assertGreaterEqual(ledger.delta_S_total - LN2 * von_neumann(rho), -1e-9)
            self.assertGreaterEqual(ledger.generalized_entropy, -1e-9)

    def test_temperature_grid_minimum_sits_at_matched_temperature(self):
        rng = sampling.rng_for(32)
        rho = sampling.random_density(rng, 2, floor=0.05)
        hamiltonian = erasure_hamiltonian(rho, 1.0)
        temperatures = [0.25 * i for i in range(1, 21)]
        scan = thermal_grid_scan(rho, hamiltonian, temperatures)
        totals = {T: ledger.delta_S_total for T, ledger in scan}
        best = min(totals, key=totals.get)
        self.assertEqual(best, 1.0)
        self.assertAlmostEqual(totals[1.0], optimal_erasure_entropy(rho), delta=1e-9)
        for total in totals.values():
            self.assertGreaterEqual(total - totals[1.0], -1e-9)

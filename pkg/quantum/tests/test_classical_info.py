import math

import numpy as np
from django.test import SimpleTestCase

from quantum.classical_info import (
    AtypicalSequenceError, binomial_sigma, bsc_residual_error, bsc_simulate, bsc_transmit, build_codebook,
    channel_capacity, compression_bits, error_pattern_bits, exact_typical_set, log2_typical_count,
    repetition_decode, repetition_encode, string_probabilities, typical_count, typical_ones,
)
from quantum.entropy import binary_entropy
from quantum.exceptions import ContractError, ResourceError


class TypicalSetTests(SimpleTestCase):
    def test_typical_count_for_one_eighth(self):
        self.assertEqual(typical_count(8, 1 / 8), 8)

    def test_no_ones(self):
        self.assertEqual(typical_count(8, 0), 1)

    def test_half_integer_expectation_rounds_up(self):
        self.assertEqual(typical_ones(5, 0.5), 3)
        self.assertEqual(typical_ones(2, 0.25), 1)
        self.assertEqual(typical_ones(10, 0.23), 2)
        self.assertEqual(typical_count(5, 0.5), 10)

    def test_compression_bits(self):
        bits = compression_bits(8, 1 / 8)
        self.assertEqual(bits.exact, 3.0)
        self.assertAlmostEqual(bits.stirling / 8, 0.5436, delta=1e-4)
        self.assertEqual(compression_bits(8, 0).exact, 0.0)

    def test_stirling_term_is_n_times_entropy(self):
        for N, p1 in ((10, 0.3), (40, 0.25), (100, 0.1)):
            bits = compression_bits(N, p1)
            self.assertEqual(bits.stirling, N * binary_entropy(p1))
            self.assertGreaterEqual(bits.exact, 0)
            self.assertLessEqual(bits.exact, N)

    def test_log_gamma_path_agrees_with_exact_binomial(self):
        self.assertAlmostEqual(log2_typical_count(200, 0.3), math.log2(math.comb(200, 60)), delta=1e-9)

    def test_exact_typical_set(self):
        strings = exact_typical_set(8, 1 / 8)
        self.assertEqual(len(strings), 8)
        self.assertTrue(all(sum(s) == 1 for s in strings))

    def test_exact_typical_set_guard(self):
        with self.assertRaises(ResourceError):
            exact_typical_set(21, 0.5)


class ChannelTests(SimpleTestCase):
    def test_noiseless_and_useless_channels(self):
        self.assertEqual(channel_capacity(1000, 0), 1000)
        self.assertAlmostEqual(channel_capacity(1000, 0.5), 0.0, delta=1e-12)

    def test_capacity_at_one_percent(self):
        self.assertAlmostEqual(channel_capacity(1000, 0.01), 919.21, delta=0.01)

    def test_capacity_identity(self):
        for q in (0, 0.01, 0.11, 0.5):
            self.assertAlmostEqual(channel_capacity(1000, q) + error_pattern_bits(1000, q), 1000, delta=1e-12)

    def test_capacity_decreases_with_noise(self):
        values = [channel_capacity(100, q) for q in np.linspace(0, 0.5, 11)]
        self.assertEqual(values, sorted(values, reverse=True))


class RepetitionCodeTests(SimpleTestCase):
    def test_majority_vote(self):
        self.assertEqual(repetition_decode('101'), 1)
        self.assertEqual(repetition_decode('000'), 0)

    def test_round_trip(self):
        for bit in (0, 1):
            self.assertEqual(repetition_decode(repetition_encode(bit, 5)), bit)

    def test_even_copies_rejected(self):
        with self.assertRaises(ContractError):
            repetition_encode(1, 4)
        with self.assertRaises(ContractError):
            repetition_decode('10')

    def test_exact_residual_error(self):
        self.assertAlmostEqual(bsc_residual_error(3, 0.01), 2.98e-4, delta=1e-7)
        self.assertEqual(bsc_residual_error(3, 0), 0)
        self.assertAlmostEqual(bsc_residual_error(1, 0.2), 0.2, delta=1e-15)

    def test_residual_error_decreases_with_copies(self):
        for q in (0.2, 0.1, 0.01):
            values = [bsc_residual_error(n, q) for n in (1, 3, 5, 7)]
            self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_simulation_within_four_sigma(self):
        exact = bsc_residual_error(3, 0.01)
        rate = bsc_simulate(3, 0.01, 100_000, seed=7)
        self.assertLessEqual(abs(rate - exact), 4 * binomial_sigma(exact, 100_000))

    def test_simulation_is_reproducible(self):
        first = bsc_simulate(3, 0.1, 20_000, seed=3, workers=4)
        second = bsc_simulate(3, 0.1, 20_000, seed=3, workers=4)
        self.assertEqual(first, second)

    def test_simulation_needs_trials(self):
        with self.assertRaises(ContractError):
            bsc_simulate(3, 0.01, 0, seed=1)

    def test_noiseless_transmission(self):
        rng = np.random.default_rng(0)
        self.assertEqual(bsc_transmit('10110', 0.0, rng), (1, 0, 1, 1, 0))
        self.assertEqual(bsc_transmit('10110', 1.0, rng), (0, 1, 0, 0, 1))


class CodebookTests(SimpleTestCase):
    def test_covers_the_single_one_strings(self):
        typical = exact_typical_set(8, 1 / 8)
        probabilities = string_probabilities(8, 1 / 8)
        coverage = probabilities[0] + 8 * probabilities[1]
        codebook = build_codebook(8, 1 / 8, coverage)
        self.assertEqual(len(codebook.typical), 9)
        self.assertEqual(codebook.typical[0], (0,) * 8)
        self.assertTrue(set(typical) <= set(codebook.typical))
        self.assertEqual(codebook.code_bits, 4)

    def test_full_coverage_keeps_every_string(self):
        codebook = build_codebook(6, 0.2, 1.0)
        self.assertEqual(len(codebook.typical), 64)
        self.assertEqual(codebook.code_bits, 6)

    def test_round_trip_and_atypical_signal(self):
        codebook = build_codebook(8, 1 / 8, 0.6)
        for bits in codebook.typical:
            self.assertEqual(codebook.expand(codebook.compress(bits)), bits)
        with self.assertRaises(AtypicalSequenceError):
            codebook.compress('11111111')

    def test_minimal_coverage(self):
        codebook = build_codebook(10, 0.2, 0.9)
        probabilities = string_probabilities(10, 0.2)
        indices = [int(''.join(map(str, bits)), 2) for bits in codebook.typical]
        self.assertGreaterEqual(probabilities[indices].sum(), 0.9 - 1e-12)
        self.assertLess(probabilities[indices[:-1]].sum(), 0.9)

    def test_sampled_failure_rate(self):
        codebook = build_codebook(12, 0.1, 0.99)
        rng = np.random.default_rng(12)
        samples = rng.random((10_000, 12)) < 0.1
        failures = 0
        for row in samples.astype(int):
            try:
                codebook.compress(row)
            except AtypicalSequenceError:
                failures += 1
        miss = 1 - codebook.mass
        self.assertLessEqual(failures / 10_000, miss + 4 * binomial_sigma(max(miss, 1e-4), 10_000))

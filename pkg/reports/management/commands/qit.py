import argparse
import json
import logging
import math
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError

from quantum import classical_info, entangle, qcompress
from quantum.config import parse_config
from quantum.entropy import shannon
from quantum.erasure import szilard_cycle
from quantum.exceptions import QuantumError
from quantum.io import parse_ensemble
from quantum.qstate import Ensemble, PureState, schmidt_rank
from quantum.utils import erasure_payload, holevo_payload
from reports.checks import SECTIONS
from reports.models import ReportRun
from reports.report import FORMATS, emit, run_report

logger = logging.getLogger(__name__)


def _common_flags():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--config', help='JSON config file')
    parent.add_argument('--seed', type=int, help='Seed for randomized steps (overrides QIT_SEED)')
    parent.add_argument('--kb', type=float, help='Boltzmann constant (default 1)')
    parent.add_argument('--hbar', type=float, help='Reduced Planck constant (default 1)')
    return parent


def _two_state_source():
    return Ensemble(((0.5, PureState([1, 0])), (0.5, PureState.from_amplitudes([1, 1]))))


class Command(BaseCommand):
    help = 'Quantum information toolkit: recompute reference values and run the worked examples'

    def add_arguments(self, parser):
        common = _common_flags()
        subparsers = parser.add_subparsers(dest='subcommand', required=True)

        report = subparsers.add_parser('report', parents=[common], help='Check every reference value')
        report.add_argument('--filter', action='append', choices=SECTIONS, help='Only run this section (repeatable)')
        report.add_argument('--format', choices=FORMATS, default='text')
        report.add_argument('--output', help='Also write the report to this path')
        report.add_argument('--save', action='store_true', help='Persist the run to the database')

        classical = subparsers.add_parser('classical', parents=[common], help='Typical sequences and noisy channels')
        classical.add_argument('--n', type=int, default=8, help='Message length N')
        classical.add_argument('--p1', type=float, default=1 / 8, help='Probability of a one')
        classical.add_argument('--q', type=float, default=0.01, help='Bit-flip probability of the channel')
        classical.add_argument('--copies', type=int, default=3, help='Repetition code length (odd)')
        classical.add_argument('--channel-uses', type=int, default=1000, help='N_C for the capacity bound')
        classical.add_argument('--trials', type=int, default=100_000)
        classical.add_argument('--coverage', type=float, help='Also build the probability-ordered codebook with this mass')

        erase = subparsers.add_parser('erase', parents=[common], help='Erasure ledgers')
        erase.add_argument('--state', help='Ensemble JSON file for rho; omit for the Szilard cycle')
        erase.add_argument('--temperature', type=float, default=1.0)
        erase.add_argument('--match', action='store_true', help='Tune the bath so its thermal state is rho')
        erase.add_argument('--support', action='store_true', help='Allow rank-deficient rho (erase on its support)')

        holevo = subparsers.add_parser('holevo', parents=[common], help='Holevo bound of a signal ensemble')
        holevo.add_argument('ensemble', nargs='?', help='Ensemble JSON file; omit for the two-state source')

        compress = subparsers.add_parser('qcompress', parents=[common], help='Toy Schumacher compression')
        compress.add_argument('--p0', type=float, default=0.95)
        compress.add_argument('--n', type=int, default=7)
        compress.add_argument('--m', type=int, default=3)
        compress.add_argument('--trials', type=int, default=10_000)

        distill = subparsers.add_parser('distill', parents=[common], help='Procrustean distillation of one pair')
        distill.add_argument('--alpha2', type=float, default=0.8, help='Value of alpha^2')
        distill.add_argument('--trials', type=int, default=10_000)

        correlations = subparsers.add_parser('correlations', parents=[common], help='Anticorrelation experiment')
        correlations.add_argument('--angle', type=float, default=45.0, help='Polarizer angle in degrees')

        entangle_parser = subparsers.add_parser('entangle', parents=[common], help='Entangling evolution and no-cloning')
        entangle_parser.add_argument('--copies', type=int, default=2, help='Largest number of copies for no-cloning')

    def handle(self, *args, **options):
        subcommand = options['subcommand']
        try:
            config = parse_config(
                {'seed': options.get('seed'), 'k_boltzmann': options.get('kb'), 'hbar': options.get('hbar')},
                options.get('config'),
            )
            if subcommand == 'report':
                return self._report(options, config)
            payload = getattr(self, f"_{subcommand}")(options, config)
        except (QuantumError, ValidationError) as e:
            logger.error(f"qit {subcommand} failed: {e}")
            raise CommandError(str(e))
        self.stdout.write(json.dumps(payload, indent=2))

    def _report(self, options, config):
        sections = options.get('filter') or None
        result = run_report(sections=sections, seed=config.seed)
        self.stdout.write(emit(result, options['format'], options.get('output')), ending='')
        if options.get('save'):
            run = ReportRun.record(result, sections)
            self.stderr.write(f"Saved report run {run.id}")
        if not result.passed:
            raise CommandError(f"{result.summary['fail']} reference values failed", returncode=1)

    def _load_ensemble(self, path):
        try:
            return parse_ensemble(Path(path).read_text())
        except FileNotFoundError:
            raise CommandError(f"Ensemble file {path} does not exist")

    def _classical(self, options, config):
        n, p1, q, copies = options['n'], options['p1'], options['q'], options['copies']
        bits = classical_info.compression_bits(n, p1)
        payload = {
            'exact_bits': bits.exact,
            'stirling_bits': bits.stirling,
            'capacity': classical_info.channel_capacity(options['channel_uses'], q),
            'residual_exact': classical_info.bsc_residual_error(copies, q),
            'residual_empirical': classical_info.bsc_simulate(copies, q, options['trials'], config.seed),
            'typical_count': classical_info.typical_count(n, p1),
            'per_symbol_bits': shannon([p1, 1 - p1]),
        }
        if options.get('coverage') is not None:
            codebook = classical_info.build_codebook(n, p1, options['coverage'])
            payload['codebook'] = {
                'size': len(codebook.typical),
                'code_bits': codebook.code_bits,
                'mass': codebook.mass,
            }
        return payload

    def _erase(self, options, config):
        if not options.get('state'):
            return szilard_cycle(options['temperature']).scaled(config.k_boltzmann).as_dict()
        return erasure_payload(
            self._load_ensemble(options['state']),
            temperature=options['temperature'],
            match=options['match'],
            support=options['support'],
            k=config.k_boltzmann,
        )

    def _holevo(self, options, config):
        ensemble = self._load_ensemble(options['ensemble']) if options.get('ensemble') else _two_state_source()
        return holevo_payload(ensemble)

    def _qcompress(self, options, config):
        spec = qcompress.source_from_probability(options['p0'])
        scheme = qcompress.build_scheme(spec, options['n'], options['m'])
        return {
            'success_prob_exact': qcompress.block_success_prob(spec, options['n'], options['m']),
            'success_prob_empirical': qcompress.simulate_block_success(spec, scheme, options['trials'], config.seed),
            'rate': qcompress.asymptotic_rate(spec),
            'bound': qcompress.landauer_rate_bound(spec),
        }

    def _distill(self, options, config):
        alpha2 = options['alpha2']
        if not 0.5 <= alpha2 < 1:
            raise CommandError(f"--alpha2 must lie in [0.5, 1), got {alpha2}")
        alpha, beta = math.sqrt(alpha2), math.sqrt(1 - alpha2)
        success, failure = entangle.procrustean_distill(alpha, beta)
        pair = PureState([alpha, 0, 0, beta], (2, 2))
        sampled = entangle.sample_distillation(alpha, beta, options['trials'], config.seed)
        return {
            'success_probability': success.probability,
            'failure_probability': failure.probability,
            'input_entanglement': entangle.entanglement_entropy(pair),
            'bound': entangle.distill_bound(pair, 2),
            'sampled_success_rate': sampled.rate,
        }

    def _correlations(self, options, config):
        basis = entangle.PolarizationBasis.from_degrees(options['angle'])
        classical = entangle.anticorrelation_probs(entangle.classically_correlated_state(), basis)
        quantum = entangle.anticorrelation_probs(entangle.maximally_correlated_state(), basis)
        return {
            'angle_degrees': options['angle'],
            'classical': {'p_xy': classical[0], 'p_yx': classical[1]},
            'entangled': {'p_xy': quantum[0], 'p_yx': quantum[1]},
        }

    def _entangle(self, options, config):
        run = entangle.entangling_demo(config.hbar)
        return {
            'final_state': [[v.real, v.imag] for v in run.final.vector],
            'schmidt_rank_initial': schmidt_rank(run.initial),
            'schmidt_rank_final': run.schmidt_rank_final,
            'no_cloning_bits': [entangle.no_cloning_demo(k) for k in range(1, options['copies'] + 1)],
        }

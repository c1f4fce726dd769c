import json
import tempfile
from pathlib import Path
from unittest import mock

import numpy as np
from django.test import SimpleTestCase

from quantum.exceptions import DomainError
from reports.checks import REGISTRY, SECTIONS, Check, checks_for
from reports.report import FAIL, PASS, ReportEntry, emit, render_json, render_text, run_report

SEED = 20240601


class RegistryTests(SimpleTestCase):
    def test_every_section_has_checks(self):
        self.assertEqual({c.section for c in REGISTRY}, set(SECTIONS))

    def test_ids_are_unique(self):
        ids = [c.id for c in REGISTRY]
        self.assertEqual(len(ids), len(set(ids)))

    def test_filter_and_ordering(self):
        selected = checks_for(['holevo', 'erasure'])
        self.assertEqual({c.section for c in selected}, {'holevo', 'erasure'})
        self.assertEqual([c.id for c in selected], sorted(c.id for c in selected))

    def test_unknown_section(self):
        with self.assertRaises(ValueError):
            checks_for(['thermo'])


class FullReportTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.result = run_report(seed=SEED)

    def test_every_reference_value_passes(self):
        failed = [(e.id, e.computed, e.note) for e in self.result.entries if not e.passed]
        self.assertEqual(failed, [])
        self.assertEqual(self.result.summary, {'pass': len(REGISTRY), 'fail': 0})

    def test_entries_are_ordered_by_id(self):
        ids = [e.id for e in self.result.entries]
        self.assertEqual(ids, sorted(ids))

    def test_json_is_reproducible(self):
        self.assertEqual(render_json(self.result), render_json(run_report(seed=SEED)))

    def test_filtering_keeps_random_streams(self):
        alone = run_report(sections=['entropy'], seed=SEED)
        full = {e.id: e.computed for e in self.result.entries}
        for entry in alone.entries:
            self.assertEqual(entry.computed, full[entry.id])

    def test_text_table(self):
        text = render_text(self.result)
        lines = text.splitlines()
        self.assertTrue(lines[0].startswith('ID'))
        self.assertEqual(lines[-1], f"{len(REGISTRY)} passed, 0 failed")
        self.assertIn('qcompress.likely_probability', text)

    def test_json_layout(self):
        data = json.loads(render_json(self.result))
        self.assertEqual(set(data), {'entries', 'summary'})
        self.assertEqual(
            set(data['entries'][0]),
            {'id', 'section', 'description', 'paper_value', 'computed', 'tolerance', 'status', 'note'},
        )


class ReportBehaviourTests(SimpleTestCase):
    def test_filtered_run(self):
        result = run_report(sections=['qcompress'], seed=SEED)
        self.assertTrue(result.passed)
        self.assertEqual({e.section for e in result.entries}, {'qcompress'})

    def test_tolerance_override(self):
        result = run_report(sections=['qcompress'], seed=SEED, tolerances={'qcompress.likely_probability': 0})
        entry = next(e for e in result.entries if e.id == 'qcompress.likely_probability')
        self.assertEqual(entry.status, FAIL)
        self.assertEqual(entry.tolerance, 0.0)
        self.assertFalse(result.passed)
        self.assertEqual(result.summary['fail'], 1)

    def test_raising_check_becomes_a_failed_entry(self):
        def boom(rng):
            raise DomainError("negative temperature")

        broken = Check('erasure.broken', 'erasure', 'Always raises', 0.0, 1e-9, boom)
        with mock.patch('reports.report.checks_for', return_value=[broken]):
            result = run_report(seed=SEED)
        entry = result.entries[0]
        self.assertEqual(entry.status, FAIL)
        self.assertIsNone(entry.computed)
        self.assertIn('DomainError', entry.note)

    def test_numpy_failures_stay_inside_their_row(self):
        def singular(rng):
            return float(np.linalg.inv(np.zeros((2, 2)))[0, 0])

        def overflow(rng):
            with np.errstate(over='raise'):
                return float(np.exp(np.float64(1000)))

        broken = [
            Check('entropy.overflow', 'entropy', 'Overflows', 0.0, 1e-9, overflow),
            Check('entropy.singular', 'entropy', 'Inverts a singular matrix', 0.0, 1e-9, singular),
        ]
        with mock.patch('reports.report.checks_for', return_value=broken):
            result = run_report(seed=SEED)
        self.assertEqual([e.status for e in result.entries], [FAIL, FAIL])
        self.assertIn('FloatingPointError', result.entries[0].note)
        self.assertIn('LinAlgError', result.entries[1].note)

    def test_evaluate(self):
        sample = Check('entropy.sample', 'entropy', 'Sample', 1.0, 0.1, lambda rng: 1.0)
        self.assertEqual(ReportEntry.evaluate(sample, 1.05).status, PASS)
        self.assertEqual(ReportEntry.evaluate(sample, 1.2).status, FAIL)
        self.assertEqual(ReportEntry.evaluate(sample, None).status, FAIL)

    def test_emit_writes_file(self):
        result = run_report(sections=['holevo'], seed=SEED)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'report.json'
            output = emit(result, 'json', path)
            self.assertEqual(path.read_text(), output)
        self.assertEqual(json.loads(output)['summary'], {'pass': 1, 'fail': 0})

    def test_emit_unknown_format(self):
        with self.assertRaises(ValueError):
            emit(run_report(sections=['holevo'], seed=SEED), 'yaml')

import json
import os
import shlex
import tempfile
from io import StringIO
from unittest import mock

from django.test import SimpleTestCase

from certificates.models import UNSAT, SolveVerdict
from certificates.serializers import CertificateSerializer, VerifyReportSerializer
from certificates.solver import solve
from generators.families import family
from generators.models import PathSystemSpec
from generators.path_systems import random_path_system
from graphs.codec import to_graph6
from graphs.models import Graph
from kempe.models import ColoredInstance
from kempe.serializers import InstanceSerializer
from zmodel.doubling import z_of

from .fuzzing import replay_line, run_fuzz
from .models import RunConfig
from .renderers import instance_dot, render_text
from .runner import run
from .serializers import (FuzzReportSerializer, RemarkAggregateSerializer,
                          RunConfigSerializer, SweepReportSerializer)
from .sweeps import run_zsweep


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        self.dir = tmp.name

    def write(self, name, content):
        path = os.path.join(self.dir, name)
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(content if isinstance(content, str) else json.dumps(content))
        return path

    def call(self, *argv):
        stdout, stderr = StringIO(), StringIO()
        code = run(list(argv), stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    def call_json(self, *argv):
        code, out, err = self.call(*argv)
        return code, (json.loads(out) if out.strip() else None), err

    def instance_file(self, inst, name='inst.json'):
        return self.write(name, dict(InstanceSerializer(inst).data))


class RunnerTestCase(CommandTestCase):

    def test_unknown_command(self):
        code, out, err = self.call('frobnicate')
        self.assertEqual(code, 2)
        self.assertIn("unknown command 'frobnicate'", err)
        self.assertEqual(self.call()[0], 2)

    def test_missing_flag_is_a_usage_error(self):
        code, _, err = self.call('z')
        self.assertEqual(code, 2)
        self.assertIn('--in', err)

    def test_report_header(self):
        code, data, _ = self.call_json('family', 'petersen', '--seed', '9')
        self.assertEqual(code, 0)
        self.assertEqual(data['tool'], 'kempelab')
        self.assertEqual((data['command'], data['seed'], data['status']), ('family', 9, 0))
        self.assertEqual(len(data['digest']), 32)
        self.assertEqual(data['report']['n'], 10)
        self.assertEqual(len(data['report']['edges']), 15)

    def test_bad_budget_names_the_flag(self):
        path = self.instance_file(ColoredInstance.singletons(family('complete', 3)))
        code, _, err = self.call('solve', '--in', path, '--budget-nodes', '0')
        self.assertEqual(code, 2)
        self.assertIn('--budget-nodes', err)
        code, _, err = self.call('solve', '--in', path, '--budget-secs', '-1')
        self.assertEqual(code, 2)
        self.assertIn('--budget-secs', err)

    def test_format_must_be_supported(self):
        code, _, err = self.call('counting', '--in', self.write('g.txt', 'Bw'), '--format', 'dot')
        self.assertEqual(code, 2)
        self.assertIn('--format', err)
        self.assertEqual(self.call('family', 'prism', '--format', 'svg')[0], 2)

    def test_run_config(self):
        serializer = RunConfigSerializer(data={'command': 'solve', 'budget_nodes': 50})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()
        self.assertEqual(config, RunConfig('solve', {}, 0, 50, None, None, 'json', 1))
        self.assertEqual(config.budget.nodes, 50)
        self.assertFalse(RunConfigSerializer(data={'command': 'solve', 'threads': 0}).is_valid())


class GraphCommandsTestCase(CommandTestCase):

    def test_family_formats(self):
        code, out, _ = self.call('family', 'cycle', '--n', '5', '--format', 'text')
        self.assertEqual((code, out.strip()), (0, to_graph6(family('cycle', 5))))
        code, out, _ = self.call('family', 'prism', '--format', 'dot')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('graph prism {'))
        self.assertEqual(out.count(' -- '), 9)

    def test_family_errors(self):
        code, _, err = self.call('family', 'cycle')
        self.assertEqual(code, 2)
        self.assertIn('needs n >= 3', err)
        code, _, err = self.call('family', 'nosuch')
        self.assertEqual(code, 2)
        self.assertIn('family:', err)

    def test_z(self):
        path = self.write('p2.json', {'n': 2, 'edges': [[0, 1]]})
        code, data, _ = self.call_json('z', '--in', path)
        self.assertEqual(code, 0)
        instance = data['report']['instance']
        self.assertEqual(instance['classes'], [[0, 1], [2, 3]])
        self.assertEqual(instance['transversal'], [0, 2])
        self.assertEqual(data['digest'], z_of(family('path', 2)).inst.digest())
        code, out, _ = self.call('z', '--in', path, '--format', 'dot')
        self.assertEqual(out.count('penwidth=3'), 2)

    def test_unreadable_and_malformed_graphs(self):
        code, _, err = self.call('z', '--in', os.path.join(self.dir, 'missing.json'))
        self.assertEqual(code, 2)
        self.assertIn('--in', err)
        code, _, err = self.call('z', '--in', self.write('bad.json', '{"n": 3, "edges": [[0, 3]]}'))
        self.assertEqual(code, 2)
        self.assertIn('edges[0]', err)
        code, _, err = self.call('z', '--in', self.write('broken.json', '{"n": 3,'))
        self.assertEqual(code, 2)
        self.assertIn('byte', err)

    def test_hgraph(self):
        path = self.instance_file(ColoredInstance.singletons(family('complete', 5)))
        code, data, _ = self.call_json('hgraph', '--in', path, '--chains')
        report = data['report']
        self.assertEqual(code, 0)
        self.assertEqual((report['k'], len(report['edges'])), (5, 10))
        self.assertTrue(report['kempe_coloring'])
        self.assertEqual(report['connected_pairs'], 10)
        self.assertEqual(len(report['chains']), 10)
        code, data, _ = self.call_json('hgraph', '--in', path)
        self.assertNotIn('chains', data['report'])

    def test_goodperm(self):
        code, data, _ = self.call_json('goodperm', '--in', self.write('k3.txt', to_graph6(family('complete', 3))))
        report = data['report']
        self.assertEqual(code, 0)
        self.assertTrue(report['found'])
        self.assertTrue(CertificateSerializer(data=report['certificate']).is_valid())
        code, out, _ = self.call('goodperm', '--in', self.write('g7.txt', to_graph6(family('g7'))),
                                 '--format', 'text')
        self.assertEqual((code, out.strip()), (0, 'none'))

    def test_counting_on_g7(self):
        code, data, _ = self.call_json('counting', '--in', self.write('g7.txt', to_graph6(family('g7'))))
        report = data['report']
        self.assertEqual(code, 0)
        self.assertEqual(report['verdict'], 'UNSAT_CERTIFIED')
        self.assertEqual((report['min_bound'], report['vertex_count']), (15, 14))

    def test_minor(self):
        petersen = self.write('petersen.txt', to_graph6(family('petersen')))
        k5 = self.write('k5.txt', to_graph6(family('complete', 5)))
        k4 = self.write('k4.txt', to_graph6(family('complete', 4)))
        code, data, _ = self.call_json('minor', '--g', petersen, '--h', k5)
        self.assertEqual(code, 0)
        self.assertTrue(data['report']['found'])
        self.assertEqual(len(data['report']['embedding']['bags']), 5)
        self.assertEqual(data['report']['violations'], 0)
        code, out, _ = self.call('minor', '--g', k4, '--h', k5, '--format', 'text')
        self.assertEqual((code, out.strip()), (0, 'none'))


class CertificateCommandsTestCase(CommandTestCase):

    def setUp(self):
        super().setUp()
        self.inst = z_of(family('cycle', 5)).inst
        self.path = self.instance_file(self.inst)

    def test_solve_full_pattern(self):
        code, data, _ = self.call_json('solve', '--in', self.path)
        self.assertEqual(code, 0)
        self.assertEqual(data['report']['status'], 'SAT')
        self.assertEqual(data['digest'], self.inst.digest())

    def test_solve_with_pattern_file_and_rules(self):
        pattern = self.write('pat.json', {'k': 5, 'edges': [[0, 1], [1, 2]]})
        code, data, _ = self.call_json('solve', '--in', self.path, '--pattern', pattern,
                                       '--disable-rule', 'capacity', '--threads', '1')
        self.assertEqual(code, 0)
        self.assertEqual(data['report']['status'], 'SAT')
        self.assertNotIn('capacity', data['report']['stats']['pruned'])
        self.assertEqual(self.call('solve', '--in', self.path, '--disable-rule', 'magic')[0], 2)

    def test_solve_budget_exceeded(self):
        code, data, err = self.call_json('solve', '--in', self.path, '--budget-nodes', '1')
        self.assertEqual(code, 3)
        self.assertEqual(data['report']['status'], 'BUDGET_EXCEEDED')
        self.assertEqual(data['status'], 3)
        self.assertIn('budget', err)

    def test_solve_malformed_instance(self):
        bad = self.write('bad.json', {'graph': {'n': 3, 'edges': [[0, 1], [1, 2]]},
                                      'classes': [[0], [1, 2]], 'transversal': [0, 1]})
        code, out, err = self.call('solve', '--in', bad)
        self.assertEqual((code, out), (2, ''))
        self.assertIn('classes[1]', err)
        self.assertIn('--in', err)

    def test_pattern_outside_h(self):
        inst = ColoredInstance.build(
            family('path', 3), [[0, 2], [1]], [0, 1])
        pattern = self.write('pat.json', {'k': 2, 'edges': [[0, 1]]})
        self.assertEqual(self.call('solve', '--in', self.instance_file(inst, 'p.json'),
                                   '--pattern', pattern)[0], 0)
        inst = ColoredInstance.singletons(Graph.empty(2))
        code, _, err = self.call('solve', '--in', self.instance_file(inst, 'e.json'),
                                 '--pattern', pattern)
        self.assertEqual(code, 2)
        self.assertIn('share no Kempe chain', err)

    def test_verify(self):
        pattern = self.write('pat.json', {'k': 5, 'edges': [[0, 1]]})
        good = self.write('good.json', {'bags': {'0': [0, 3, 5], '2': [2], '4': [4],
                                                 '6': [6], '8': [8]}})
        code, data, _ = self.call_json('verify', '--in', self.path, '--pattern', pattern,
                                       '--cert', good)
        self.assertEqual(code, 0)
        self.assertEqual(data['report'], {'ok': True, 'violations': []})

        bad = self.write('bad.json', {'bags': {'0': [0], '2': [2], '4': [4], '6': [6], '8': [8]}})
        code, data, err = self.call_json('verify', '--in', self.path, '--pattern', pattern,
                                         '--cert', bad)
        self.assertEqual(code, 1)
        self.assertFalse(data['report']['ok'])
        self.assertEqual(data['report']['violations'][0]['kind'], 'uncovered')
        self.assertTrue(VerifyReportSerializer(data=data['report']).is_valid())
        self.assertIn('violations', err)

    def test_verify_bad_certificate_document(self):
        pattern = self.write('pat.json', {'k': 5, 'edges': []})
        cert = self.write('cert.json', {'bags': {'x': [1]}})
        code, _, err = self.call('verify', '--in', self.path, '--pattern', pattern, '--cert', cert)
        self.assertEqual(code, 2)
        self.assertIn('--cert', err)


class SweepCommandTestCase(CommandTestCase):

    def test_small_sweep(self):
        code, data, _ = self.call_json('zsweep', '--max-n', '4')
        report = data['report']
        self.assertEqual(code, 0)
        # 1 + 2 + 4 + 11 isomorphism classes
        self.assertEqual(report['total'], 18)
        self.assertEqual(report['verified'], 18)
        self.assertTrue(SweepReportSerializer(data=report).is_valid())
        code, out, _ = self.call('zsweep', '--max-n', '3', '--format', 'text')
        self.assertEqual(len(out.strip().splitlines()), 7)
        self.assertNotIn('FAILED', out)

    def test_sweep_limit(self):
        code, _, err = self.call('zsweep', '--max-n', '7')
        self.assertEqual(code, 2)
        self.assertIn('sweep vertex count', err)

    def test_all_graphs_up_to_six_vertices(self):
        report = run_zsweep(6)
        self.assertEqual((report.total, report.verified), (208, 208))


class FuzzCommandTestCase(CommandTestCase):

    def test_passing_trials(self):
        code, data, _ = self.call_json('fuzz', '--pattern', 'cycle:4', '--trials', '5',
                                       '--seed', '3', '--extra-edge-prob', '0.2')
        report = data['report']
        self.assertEqual(code, 0)
        self.assertEqual(data['seed'], 3)
        self.assertEqual((report['passed'], report['failures']), (5, []))
        self.assertTrue(FuzzReportSerializer(data=report).is_valid())

    def test_pattern_from_file(self):
        path = self.write('pattern.json', {'n': 3, 'edges': [[0, 1], [1, 2]]})
        code, data, _ = self.call_json('fuzz', '--pattern', path, '--trials', '2',
                                       '--kempe-complete')
        self.assertEqual(code, 0)
        self.assertEqual(data['report']['passed'], 2)

    def test_bad_pattern(self):
        code, _, err = self.call('fuzz', '--pattern', 'cycle:x')
        self.assertEqual(code, 2)
        self.assertIn('--pattern', err)
        code, _, err = self.call('fuzz', '--pattern', 'cycle:2')
        self.assertEqual(code, 2)
        self.assertIn('--pattern', err)

    def test_failures_replay(self):
        pattern = family('cycle', 4)
        bad = random_path_system(PathSystemSpec(pattern, seed=7)).digest()

        def fake_solve(inst, pat, budget=None, **options):
            if inst.digest() == bad:
                return SolveVerdict(UNSAT)
            return solve(inst, pat, budget, **options)

        with mock.patch('console.fuzzing.solve', side_effect=fake_solve):
            code, data, err = self.call_json('fuzz', '--pattern', 'cycle:4',
                                             '--trials', '4', '--seed', '5')
            self.assertEqual(code, 1)
            failures = data['report']['failures']
            self.assertEqual([f['seed'] for f in failures], [7])
            self.assertIn(failures[0]['replay'], err)

            argv = shlex.split(failures[0]['replay'])[2:]
            code, data, _ = self.call_json(*argv)
            self.assertEqual(code, 1)
            self.assertEqual(data['report']['failures'][0]['seed'], 7)

    def test_replay_line(self):
        self.assertEqual(
            replay_line('fuzz', 'wheel:5', 12, 2, 0.25, True),
            'python manage.py fuzz --pattern wheel:5 --trials 1 --seed 12 '
            '--max-internal 2 --extra-edge-prob 0.25 --kempe-complete')
        report = run_fuzz(family('path', 3), 'path:3', 3, seed=1)
        self.assertEqual((report.passed, report.budget_exceeded), (3, 0))


class RemarksCommandTestCase(CommandTestCase):

    def test_aggregate(self):
        code, data, _ = self.call_json('remarks', '--trials', '3', '--seed', '11')
        report = data['report']
        self.assertEqual(code, 0)
        self.assertEqual(report['trials'], 3)
        for key in ('premises_ok', 'nonplanar', 'k5_minors', 'consistent'):
            self.assertEqual(report[key], 3, key)
        self.assertTrue(RemarkAggregateSerializer(data=report).is_valid())

    def test_pattern_needs_five_vertices(self):
        code, _, err = self.call('remarks', '--pattern', 'complete:4', '--trials', '1')
        self.assertEqual(code, 2)
        self.assertIn('classes', err)


class RenderersTestCase(SimpleTestCase):

    def test_instance_dot(self):
        inst = ColoredInstance.build(family('path', 3), [[0, 2], [1]], [2, 1])
        dot = instance_dot(inst)
        self.assertIn('0 [fillcolor="lightblue", xlabel="c0"];', dot)
        self.assertIn('2 [fillcolor="lightblue", xlabel="c0", penwidth=3];', dot)
        self.assertIn('1 -- 2;', dot)

    def test_render_text(self):
        text = render_text({'ok': False, 'edges': [[0, 1], [1, 2]], 'bags': {'0': [1, 2]},
                            'certificate': None})
        self.assertEqual(text.splitlines(), [
            'ok: no', 'edges:', '  - 0 1', '  - 1 2', 'bags:', '  0: 1 2', 'certificate: none'])

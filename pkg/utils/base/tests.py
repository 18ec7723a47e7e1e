import json
from io import StringIO

from django.test import SimpleTestCase

from .crypto import hash_digest
from .errors import ExitStatus
from .general import first_error, flatten_errors
from .progress_bar import progressBar
from .renderer import ReportRenderer


class GeneralTestCase(SimpleTestCase):

    def test_flatten_errors(self):
        detail = {'graph': {'edges': {1: ['self-loop at 2']}},
                  'classes': [{}, ['empty']], 'non_field_errors': ['bad']}
        self.assertEqual(flatten_errors(detail), [
            ('graph.edges[1]', 'self-loop at 2'), ('classes[1]', 'empty'), ('', 'bad')])
        self.assertEqual(first_error({}), ('', 'invalid document'))


class ExitStatusTestCase(SimpleTestCase):

    def test_codes(self):
        self.assertEqual([int(s) for s in ExitStatus.all()], [0, 1, 2, 3])
        self.assertEqual(ExitStatus.detail_for(3), 'Search budget exceeded')
        self.assertEqual(ExitStatus.detail_for(9), '')


class RendererTestCase(SimpleTestCase):

    def test_header(self):
        body = ReportRenderer().render({'ok': True}, renderer_context={
            'command': 'verify', 'seed': 4, 'input': {'--in': 'a.json'}, 'status': 1})
        data = json.loads(body)
        self.assertEqual(data['report'], {'ok': True})
        self.assertEqual((data['command'], data['seed'], data['status']), ('verify', 4, 1))
        self.assertEqual(data['digest'], hash_digest({'--in': 'a.json'}))
        self.assertEqual(ReportRenderer().render(None), b'')

    def test_digest_ignores_key_order(self):
        self.assertEqual(hash_digest({'a': 1, 'b': 2}), hash_digest({'b': 2, 'a': 1}))


class ProgressBarTestCase(SimpleTestCase):

    def test_yields_every_item(self):
        stream = StringIO()
        self.assertEqual(list(progressBar([1, 2, 3], prefix='sweep', stream=stream)), [1, 2, 3])
        self.assertIn('100.0%', stream.getvalue())
        silent = StringIO()
        self.assertEqual(list(progressBar(range(2), enabled=False, stream=silent)), [0, 1])
        self.assertEqual(silent.getvalue(), '')

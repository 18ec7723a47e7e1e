from django.core.management.base import CommandError

from console.base import KempeCommand
from console.models import DOT, JSON, TEXT
from console.renderers import graph_dot
from console.serializers import GraphReportSerializer
from generators.families import family
from generators.serializers import FamilySpecSerializer
from graphs.codec import to_graph6
from utils.base.errors import ExitStatus
from utils.base.general import first_error


class Command(KempeCommand):
    help = 'Print a member of a named graph family'
    name = 'family'
    formats = (JSON, TEXT, DOT)

    def add_command_arguments(self, parser):
        parser.add_argument('family', help='Family name, e.g. cycle, petersen, wheel')
        parser.add_argument('--n', type=int, help='Size of sized families')
        parser.add_argument('--m', type=int, help='Second part size of complete_bipartite')

    def run(self, config, **options):
        serializer = FamilySpecSerializer(data={
            'name': options['family'], 'n': options.get('n'), 'm': options.get('m')})
        if not serializer.is_valid():
            path, message = first_error(serializer.errors)
            flag = 'family' if path == 'name' else f"--{path}"
            raise CommandError(f"{flag}: {message}", returncode=ExitStatus.USAGE.code)
        spec = serializer.save()
        g = family(spec)
        graph6 = to_graph6(g)
        data = GraphReportSerializer({
            'name': spec.name, 'graph6': graph6, 'n': g.n, 'edges': g.edges}).data
        return self.report(data, text=graph6, dot=graph_dot(g, spec.name))

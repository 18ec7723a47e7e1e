from console.base import KempeCommand, read_graph_file
from console.models import DOT, JSON, TEXT
from console.renderers import instance_dot
from zmodel.doubling import z_of
from zmodel.serializers import ZInstanceSerializer


class Command(KempeCommand):
    help = 'Build the doubled graph Z(G) of a graph with its canonical coloring'
    name = 'z'
    inputs = (('input', '--in'),)
    formats = (JSON, TEXT, DOT)

    def add_command_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True,
                            help='Graph file, JSON or graph6')

    def run(self, config, **options):
        z = z_of(read_graph_file(options['input'], '--in'))
        return self.report(ZInstanceSerializer(z).data, digest=z.inst.digest(),
                           dot=instance_dot(z.inst, 'Z'))

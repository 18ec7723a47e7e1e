from console.base import KempeCommand, read_instance_file
from console.models import DOT, JSON, TEXT
from console.renderers import graph_dot
from kempe.chains import h_graph, is_kempe_coloring, kempe_chains
from kempe.serializers import HGraphSerializer


class Command(KempeCommand):
    help = 'Compute the graph H on the classes of a colored instance'
    name = 'hgraph'
    inputs = (('input', '--in'),)
    formats = (JSON, TEXT, DOT)

    def add_command_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True, help='Instance file')
        parser.add_argument('--chains', action='store_true',
                            help='Also list every nontrivial Kempe chain')

    def run(self, config, **options):
        inst = read_instance_file(options['input'], '--in')
        h = h_graph(inst)
        kempe, connected = is_kempe_coloring(inst)
        data = {
            'k': h.k,
            'edges': h.edges,
            'reps': h.reps,
            'kempe_coloring': kempe,
            'connected_pairs': connected,
        }
        if options.get('chains'):
            data['chains'] = kempe_chains(inst)
        return self.report(HGraphSerializer(data).data, digest=inst.digest(),
                           dot=graph_dot(h.graph, 'H'))

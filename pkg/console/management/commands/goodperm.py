from console.base import KempeCommand, read_graph_file
from zmodel.doubling import z_of
from zmodel.permutations import find_good_permutation, permutation_certificate
from zmodel.serializers import GoodPermutationReportSerializer


class Command(KempeCommand):
    help = 'Search a good permutation of a graph and its doubled-graph certificate'
    name = 'goodperm'
    inputs = (('input', '--in'),)

    def add_command_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True,
                            help='Graph file, JSON or graph6')

    def run(self, config, **options):
        g = read_graph_file(options['input'], '--in')
        perm = find_good_permutation(g)
        if perm is None:
            data = {'found': False, 'permutation': None, 'certificate': None}
            text = 'none'
        else:
            data = {'found': True, 'permutation': list(perm.f),
                    'certificate': permutation_certificate(z_of(g), perm)}
            text = ' '.join(str(x) for x in perm.f)
        return self.report(GoodPermutationReportSerializer(data).data, text=text)

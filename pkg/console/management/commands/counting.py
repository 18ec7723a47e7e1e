from console.base import KempeCommand, read_graph_file
from zmodel.counting import counting_unsat_check
from zmodel.doubling import z_of
from zmodel.serializers import CountingReportSerializer


class Command(KempeCommand):
    help = 'Run the counting argument on the doubled graph of a graph'
    name = 'counting'
    inputs = (('input', '--in'),)

    def add_command_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True,
                            help='Graph file, JSON or graph6')

    def run(self, config, **options):
        z = z_of(read_graph_file(options['input'], '--in'))
        report = counting_unsat_check(z)
        return self.report(CountingReportSerializer(report).data, digest=z.inst.digest())

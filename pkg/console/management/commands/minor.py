from console.base import KempeCommand, read_graph_file
from console.serializers import MinorReportSerializer
from minors.search import check_embedding, has_minor
from utils.base.errors import ExitStatus


class Command(KempeCommand):
    help = 'Search H as a minor of G'
    name = 'minor'
    inputs = (('host', '--g'), ('pattern', '--h'))

    def add_command_arguments(self, parser):
        parser.add_argument('--g', dest='host', required=True, help='Host graph file')
        parser.add_argument('--h', dest='pattern', required=True, help='Pattern graph file')

    def run(self, config, **options):
        g = read_graph_file(options['host'], '--g')
        h = read_graph_file(options['pattern'], '--h')
        emb = has_minor(g, h, config.budget)
        if emb is None:
            data = {'found': False, 'embedding': None, 'violations': 0}
            return self.report(MinorReportSerializer(data).data, text='none')

        violations = check_embedding(g, h, emb)
        data = MinorReportSerializer(
            {'found': True, 'embedding': emb, 'violations': len(violations)}).data
        text = '\n'.join(f"{v}: {' '.join(map(str, sorted(bag)))}"
                         for v, bag in sorted(emb.bags.items()))
        if violations:
            return self.report(data, ExitStatus.VIOLATION, text=text,
                               summary=f"minor: embedding rejected: {violations[0].detail}")
        return self.report(data, text=text)

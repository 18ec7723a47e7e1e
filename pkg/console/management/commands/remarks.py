from console.base import KempeCommand, resolve_pattern
from console.fuzzing import run_remarks
from console.serializers import RemarkAggregateSerializer
from utils.base.errors import ExitStatus

from .fuzz import add_sampler_arguments


class Command(KempeCommand):
    help = 'Check non-planarity and a K5 minor on sampled five-class instances'
    name = 'remarks'

    def add_command_arguments(self, parser):
        parser.add_argument('--pattern', default='complete:5',
                            help='Five-vertex pattern the instances are sampled from')
        add_sampler_arguments(parser, max_internal=4)

    def run(self, config, **options):
        pattern = resolve_pattern(options['pattern'])
        report = run_remarks(
            pattern, options['pattern'], options['trials'], config.seed,
            options['max_internal'], options['extra_edge_prob'], options['kempe_complete'],
            config.budget)
        data = RemarkAggregateSerializer(report).data
        if report.failures:
            return self.report(
                data, ExitStatus.VIOLATION,
                summary='remarks: replay with: ' + '; '.join(f.replay for f in report.failures))
        if report.budget_exceeded:
            return self.report(data, ExitStatus.BUDGET,
                               summary=f"remarks: {report.budget_exceeded} trials ran out of budget")
        return self.report(data)

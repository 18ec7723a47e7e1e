from console.base import KempeCommand, resolve_pattern
from console.fuzzing import run_fuzz
from console.serializers import FuzzReportSerializer
from utils.base.errors import ExitStatus


def add_sampler_arguments(parser, max_internal):
    parser.add_argument('--trials', type=int, default=1, help='Number of sampled instances')
    parser.add_argument('--max-internal', type=int, default=max_internal,
                        help='Most internal vertices of one sampled path (even)')
    parser.add_argument('--extra-edge-prob', type=float, default=0.0,
                        help='Probability of each extra edge between path vertices')
    parser.add_argument('--kempe-complete', action='store_true',
                        help='Also make every pair of classes share a Kempe chain')


class Command(KempeCommand):
    help = 'Sample path-system instances and check each has a certificate for its pattern'
    name = 'fuzz'

    def add_command_arguments(self, parser):
        parser.add_argument('--pattern', required=True,
                            help='Pattern graph file, or family as name[:n[:m]]')
        add_sampler_arguments(parser, max_internal=2)

    def run(self, config, **options):
        pattern = resolve_pattern(options['pattern'])
        report = run_fuzz(
            pattern, options['pattern'], options['trials'], config.seed,
            options['max_internal'], options['extra_edge_prob'], options['kempe_complete'],
            config.budget, config.workers)
        data = FuzzReportSerializer(report).data
        text = '\n'.join(
            [f"{report.passed}/{report.trials} passed, {report.budget_exceeded} over budget"]
            + [failure.replay for failure in report.failures])
        if report.failures:
            return self.report(
                data, ExitStatus.VIOLATION, text=text,
                summary='fuzz: replay with: ' + '; '.join(f.replay for f in report.failures))
        if report.budget_exceeded:
            return self.report(data, ExitStatus.BUDGET, text=text,
                               summary=f"fuzz: {report.budget_exceeded} trials ran out of budget")
        return self.report(data, text=text)

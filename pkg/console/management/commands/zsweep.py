from django.conf import settings

from console.base import KempeCommand
from console.serializers import SweepReportSerializer
from console.sweeps import run_zsweep
from utils.base.errors import ExitStatus


class Command(KempeCommand):
    help = 'Certify the doubled graph of every small graph through the ladder'
    name = 'zsweep'

    def add_command_arguments(self, parser):
        parser.add_argument('--max-n', type=int, default=settings.KEMPE_SWEEP_MAX_N,
                            help='Largest base graph order')
        parser.add_argument('--progress', action='store_true', default=None,
                            help='Draw a progress bar on stderr')

    def run(self, config, **options):
        report = run_zsweep(options['max_n'], config.budget, options.get('progress'))
        data = SweepReportSerializer(report).data
        text = '\n'.join(
            f"{row.graph6}\t{row.n}\t{row.m}\t{row.path}\t{'ok' if row.verified else 'FAILED'}"
            for row in report.rows)
        if report.verified < report.total:
            failed = [row.graph6 for row in report.rows if not row.verified]
            return self.report(
                data, ExitStatus.VIOLATION, text=text,
                summary=f"zsweep: {len(failed)} certificates rejected, first {failed[0]}, "
                        f"replay with: python manage.py zsweep --max-n {report.max_n}")
        return self.report(data, text=text)

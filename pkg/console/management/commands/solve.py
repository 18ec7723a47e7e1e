from certificates.models import BUDGET_EXCEEDED, TargetPattern
from certificates.serializers import SolveVerdictSerializer, TargetPatternSerializer
from certificates.solver import solve
from console.base import KempeCommand, read_document, read_instance_file
from kempe.chains import h_graph
from utils.base.constants import PRUNING_RULES
from utils.base.errors import ExitStatus


class Command(KempeCommand):
    help = 'Decide whether an instance has a rooted certificate for a pattern'
    name = 'solve'
    inputs = (('input', '--in'), ('pattern', '--pattern'))

    def add_command_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True, help='Instance file')
        parser.add_argument('--pattern', help='Pattern file; the full H of the instance by default')
        parser.add_argument('--disable-rule', dest='disabled', action='append', default=[],
                            choices=PRUNING_RULES, help='Switch off one pruning rule')

    def run(self, config, **options):
        inst = read_instance_file(options['input'], '--in')
        if options.get('pattern'):
            pat = read_document(options['pattern'], '--pattern', TargetPatternSerializer)
        else:
            pat = TargetPattern.full(h_graph(inst))
        rules = [rule for rule in PRUNING_RULES if rule not in options.get('disabled', ())]

        verdict = solve(inst, pat, config.budget, rules=rules, workers=config.workers)
        data = SolveVerdictSerializer(verdict).data
        if verdict.status == BUDGET_EXCEEDED:
            return self.report(
                data, ExitStatus.BUDGET, digest=inst.digest(),
                summary=f"solve: budget ran out after {verdict.stats.nodes} nodes")
        return self.report(data, digest=inst.digest())

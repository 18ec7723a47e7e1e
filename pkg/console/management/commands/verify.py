from certificates.serializers import (CertificateSerializer, TargetPatternSerializer,
                                      VerifyReportSerializer)
from certificates.verifier import verify
from console.base import KempeCommand, read_document, read_instance_file
from utils.base.errors import ExitStatus


class Command(KempeCommand):
    help = 'Check a rooted certificate against an instance and a pattern'
    name = 'verify'
    inputs = (('input', '--in'), ('pattern', '--pattern'), ('cert', '--cert'))

    def add_command_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True, help='Instance file')
        parser.add_argument('--pattern', required=True, help='Pattern file')
        parser.add_argument('--cert', required=True, help='Certificate file')

    def run(self, config, **options):
        inst = read_instance_file(options['input'], '--in')
        pat = read_document(options['pattern'], '--pattern', TargetPatternSerializer)
        cert = read_document(options['cert'], '--cert', CertificateSerializer)
        violations = verify(inst, pat, cert)
        data = VerifyReportSerializer({'ok': not violations, 'violations': violations}).data
        if violations:
            return self.report(
                data, ExitStatus.VIOLATION, digest=inst.digest(),
                summary=f"verify: {len(violations)} violations, first: {violations[0].detail}")
        return self.report(data, digest=inst.digest())

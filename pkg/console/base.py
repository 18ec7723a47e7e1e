"""
Shared plumbing of the analysis commands: common flags, input
documents, error to exit-code mapping and report rendering.
"""

import logging
import os
from typing import Optional, Sequence, Tuple

from django.core.management.base import BaseCommand, CommandError

from generators.families import family
from graphs.codec import load_json, read_graph
from graphs.models import Graph
from kempe.models import ColoredInstance
from kempe.serializers import InstanceSerializer
from utils.base.errors import ExitStatus
from utils.base.exceptions import (BudgetExceeded, DocumentParseError,
                                   KempeLabError, SolverError)
from utils.base.general import first_error
from utils.base.logger import err_logger, logger
from utils.base.renderer import ReportRenderer

from .models import DOT, JSON, TEXT, CommandReport, RunConfig
from .renderers import render_text
from .serializers import RunConfigSerializer

LOG_LEVELS = {0: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}


def flag_of(path: str) -> str:
    """Option flag for a RunConfig field path, e.g. budget_nodes -> --budget-nodes"""
    return '--' + path.split('.')[0].replace('_', '-')


def read_text(path: str, flag: str) -> str:
    try:
        with open(path, encoding='utf-8') as handle:
            return handle.read()
    except OSError as exc:
        raise DocumentParseError(f"cannot read file: {exc.strerror}", source=f"{flag} {path}")


def read_document(path: str, flag: str, serializer_class):
    """Decode a JSON document and return what its serializer saves"""
    source = f"{flag} {path}"
    data = load_json(read_text(path, flag), source)
    serializer = serializer_class(data=data)
    if not serializer.is_valid():
        field, message = first_error(serializer.errors)
        raise DocumentParseError(message, path=field, source=source)
    return serializer.save()


def read_graph_file(path: str, flag: str) -> Graph:
    """JSON graph document or a graph6 line"""
    return read_graph(read_text(path, flag), f"{flag} {path}")


def read_instance_file(path: str, flag: str) -> ColoredInstance:
    return read_document(path, flag, InstanceSerializer)


def resolve_pattern(value: str, flag: str = '--pattern') -> Graph:
    """
    A graph file when `value` names one, otherwise a family written as
    ``name``, ``name:n`` or ``name:n:m``
    """
    if os.path.isfile(value):
        return read_graph_file(value, flag)
    name, *sizes = value.split(':')
    try:
        numbers = [int(size) for size in sizes]
    except ValueError:
        raise CommandError(f"{flag}: sizes of {value!r} must be integers",
                           returncode=ExitStatus.USAGE.code)
    if len(numbers) > 2:
        raise CommandError(f"{flag}: {value!r} has more than two sizes",
                           returncode=ExitStatus.USAGE.code)
    try:
        return family(name, *numbers)
    except KempeLabError as exc:
        raise CommandError(f"{flag}: {exc}", returncode=ExitStatus.USAGE.code)


class KempeCommand(BaseCommand):
    """
    Base class of every analysis command. Subclasses set `name`, declare
    their input flags in `inputs` and implement `run`, which returns a
    `CommandReport`. A report whose status is not COMPLETED is printed
    first and then turned into a CommandError carrying its exit code.
    """
    name = ''
    # (option dest, flag) of every input file the command reads
    inputs: Sequence[Tuple[str, str]] = ()
    formats = (JSON, TEXT)
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--format', dest='output_format', default=JSON,
                            help='Output format: json, dot or text')
        parser.add_argument('--seed', type=int, default=0,
                            help='Seed of randomized commands, echoed in the report header')
        parser.add_argument('--budget-nodes', type=int, help='Search node budget')
        parser.add_argument('--budget-secs', type=float, help='Search time budget in seconds')
        parser.add_argument('--threads', type=int,
                            help='Worker processes of the solver, KEMPE_THREADS by default')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def get_config(self, options) -> RunConfig:
        serializer = RunConfigSerializer(data={
            'command': self.name,
            'inputs': {flag: options[dest] for dest, flag in self.inputs if options.get(dest)},
            'seed': options.get('seed', 0),
            'budget_nodes': options.get('budget_nodes'),
            'budget_secs': options.get('budget_secs'),
            'threads': options.get('threads'),
            'format': options.get('output_format', JSON),
            'verbosity': options.get('verbosity', 1),
        })
        if not serializer.is_valid():
            path, message = first_error(serializer.errors)
            raise CommandError(f"{flag_of(path)}: {message}", returncode=ExitStatus.USAGE.code)
        config = serializer.save()
        if config.output not in self.formats:
            raise CommandError(f"--format: {self.name} has no {config.output} output",
                               returncode=ExitStatus.USAGE.code)
        return config

    def run(self, config: RunConfig, **options) -> CommandReport:
        raise NotImplementedError('subclasses of KempeCommand must provide a run() method')

    def handle(self, *args, **options):
        config = self.get_config(options)
        if config.verbosity in LOG_LEVELS:
            logger.setLevel(LOG_LEVELS[config.verbosity])

        try:
            report = self.run(config, **options)
        except BudgetExceeded as exc:
            raise CommandError(f"{self.name}: {exc}", returncode=ExitStatus.BUDGET.code)
        except SolverError as exc:
            err_logger.error(f"{self.name}: {exc}")
            raise CommandError(f"{self.name}: {exc}", returncode=ExitStatus.VIOLATION.code)
        except (DocumentParseError, KempeLabError) as exc:
            raise CommandError(str(exc), returncode=ExitStatus.USAGE.code)

        self.stdout.write(self.render(config, report))
        logger.info(f"{self.name}: {report.status.detail.lower()}")
        if report.status is not ExitStatus.COMPLETED:
            raise CommandError(report.summary or report.status.detail,
                               returncode=report.status.code)

    def render(self, config: RunConfig, report: CommandReport) -> str:
        if config.output == DOT:
            return report.dot
        if config.output == TEXT:
            return report.text if report.text is not None else render_text(report.data)
        context = {
            'command': self.name,
            'seed': config.seed,
            'digest': report.digest,
            'input': dict(config.inputs),
            'status': report.status.code,
        }
        return ReportRenderer().render(report.data, renderer_context=context).decode()

    def report(self, data, status=ExitStatus.COMPLETED, summary: str = '',
               digest: str = '', text: Optional[str] = None, dot: Optional[str] = None) -> CommandReport:
        return CommandReport(data, status, summary, digest, text, dot)

"""
``run(argv)``: the analysis commands as a function returning the exit
code, for scripts and tests that should not go through ``sys.exit``.
"""

import sys
from typing import Optional, Sequence, TextIO

from django.core.management import load_command_class
from django.core.management.base import CommandError

from utils.base.errors import ExitStatus

PROG = 'manage.py'

COMMANDS = (
    'family', 'z', 'hgraph', 'goodperm', 'solve', 'verify',
    'counting', 'zsweep', 'fuzz', 'remarks', 'minor',
)


def usage() -> str:
    return f"usage: {PROG} {{{','.join(COMMANDS)}}} [options]"


def run(argv: Sequence[str], stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(argv)
    if not argv or argv[0] not in COMMANDS:
        if argv:
            stderr.write(f"unknown command {argv[0]!r}\n")
        stderr.write(usage() + '\n')
        return ExitStatus.USAGE.code

    name = argv[0]
    command = load_command_class('console', name)
    parser = command.create_parser(PROG, name)
    try:
        options = parser.parse_args(argv[1:])
    except CommandError as exc:
        stderr.write(f"{name}: {exc}\n")
        return ExitStatus.USAGE.code
    except SystemExit as exc:
        # --help
        return exc.code or 0

    cmd_options = vars(options)
    args = cmd_options.pop('args', ())
    try:
        command.execute(*args, stdout=stdout, stderr=stderr, **cmd_options)
    except CommandError as exc:
        stderr.write(f"{exc}\n")
        return exc.returncode
    return ExitStatus.COMPLETED.code


def main():
    from kempelab import setup
    setup()
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()

"""
Seeded sampling of path-system instances whose pattern must always have
a rooted certificate. Trial i runs with seed `seed + i`, so every
failure is replayed by a single trial at that seed.
"""

from typing import Optional

from certificates.models import BUDGET_EXCEEDED, Budget, TargetPattern
from certificates.solver import solve
from generators.models import PathSystemSpec
from generators.path_systems import random_path_system
from graphs.models import Graph
from minors.remarks import validate_remarks
from utils.base.exceptions import BudgetExceeded
from utils.base.logger import err_logger, logger

from .models import FuzzFailure, FuzzReport, RemarkAggregate, RemarkFailure

PROG = 'python manage.py'


def replay_line(command: str, label: str, seed: int, max_internal: int,
                extra_edge_prob: float, kempe_complete: bool) -> str:
    parts = [PROG, command, '--pattern', label, '--trials', '1', '--seed', str(seed),
             '--max-internal', str(max_internal), '--extra-edge-prob', repr(extra_edge_prob)]
    if kempe_complete:
        parts.append('--kempe-complete')
    return ' '.join(parts)


def run_fuzz(pattern: Graph, label: str, trials: int, seed: int = 0, max_internal: int = 2,
             extra_edge_prob: float = 0.0, kempe_complete: bool = False,
             budget: Optional[Budget] = None, workers: Optional[int] = None) -> FuzzReport:
    pat = TargetPattern.from_graph(pattern)
    passed = exceeded = 0
    failures = []
    for trial in range(trials):
        trial_seed = seed + trial
        inst = random_path_system(PathSystemSpec(
            pattern, trial_seed, max_internal, extra_edge_prob, kempe_complete))
        verdict = solve(inst, pat, budget, workers=workers)
        if verdict.sat:
            passed += 1
        elif verdict.status == BUDGET_EXCEEDED:
            exceeded += 1
            logger.warning(f"fuzz seed {trial_seed}: budget ran out after {verdict.stats.nodes} nodes")
        else:
            replay = replay_line('fuzz', label, trial_seed, max_internal,
                                 extra_edge_prob, kempe_complete)
            err_logger.error(f"fuzz seed {trial_seed}: no certificate for {label}, replay with: {replay}")
            failures.append(FuzzFailure(
                trial_seed, verdict.status,
                f"instance {inst.digest()} has no certificate for the pattern", replay))
    return FuzzReport(label, seed, trials, max_internal, extra_edge_prob, kempe_complete,
                      passed, exceeded, tuple(failures))


def run_remarks(pattern: Graph, label: str, trials: int, seed: int = 0, max_internal: int = 4,
                extra_edge_prob: float = 0.0, kempe_complete: bool = False,
                budget: Optional[Budget] = None) -> RemarkAggregate:
    counts = {'premises_ok': 0, 'nonplanar': 0, 'k5_minors': 0, 'consistent': 0}
    exceeded = 0
    failures = []
    for trial in range(trials):
        trial_seed = seed + trial
        inst = random_path_system(PathSystemSpec(
            pattern, trial_seed, max_internal, extra_edge_prob, kempe_complete))
        try:
            report = validate_remarks(inst, budget)
        except BudgetExceeded as exc:
            exceeded += 1
            logger.warning(f"remarks seed {trial_seed}: {exc}")
            continue
        counts['premises_ok'] += report.premises_ok
        counts['nonplanar'] += not report.planar
        counts['k5_minors'] += report.has_k5_minor
        counts['consistent'] += report.consistent
        if not report.consistent:
            failures.append(RemarkFailure(
                trial_seed, report.planar, report.has_k5_minor,
                replay_line('remarks', label, trial_seed, max_internal,
                            extra_edge_prob, kempe_complete)))
    return RemarkAggregate(label, seed, trials, budget_exceeded=exceeded,
                           failures=tuple(failures), **counts)

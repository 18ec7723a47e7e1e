from typing import Optional

from certificates.models import (COUNTING, SAT, UNSAT, Budget, SearchStats,
                                 SolveVerdict, TargetPattern)
from certificates.solver import solve
from kempe.chains import h_graph
from utils.base.logger import logger

from .counting import counting_unsat_check
from .models import UNSAT_CERTIFIED, ZInstance
from .permutations import find_good_permutation, permutation_certificate


def decide(z: ZInstance, budget: Optional[Budget] = None, **options) -> SolveVerdict:
    """
    Certificate question for the full pattern of a doubled graph: a good
    permutation answers SAT, the counting argument answers UNSAT, and
    anything else goes to the exact solver.
    """
    pat = TargetPattern.full(h_graph(z.inst))

    perm = find_good_permutation(z.base)
    if perm is not None:
        logger.debug('decided by a good permutation')
        return SolveVerdict(SAT, permutation_certificate(z, perm), SearchStats())

    report = counting_unsat_check(z)
    if report.verdict == UNSAT_CERTIFIED:
        logger.debug(f"decided by counting, bound {report.min_bound} > {report.vertex_count}")
        return SolveVerdict(UNSAT, None, SearchStats(), COUNTING)

    return solve(z.inst, pat, budget, **options)

from typing import Optional

from certificates.models import BUDGET_EXCEEDED, Budget, RootedCertificate, TargetPattern
from certificates.solver import solve
from certificates.verifier import verify
from graphs.operations import is_connected_set
from kempe.chains import h_graph, is_kempe_coloring
from kempe.models import ColoredInstance
from utils.base.exceptions import BudgetExceeded, PatternError, SolverError
from utils.base.logger import logger


def connected_transversal_certificate(inst: ColoredInstance, budget: Optional[Budget] = None,
                                      **options) -> RootedCertificate:
    """
    Rooted K5 certificate for a Kempe 5-coloring whose transversal
    induces a connected subgraph. Transversal edges already realize
    their pattern edges, so only the missing pairs are searched for and
    the result is checked against the full pattern.
    """
    if inst.k != 5:
        raise PatternError(f"need exactly five classes, got {inst.k}")
    kempe, connected = is_kempe_coloring(inst)
    if not kempe:
        raise PatternError(f"not a Kempe coloring, only {connected} of 10 class pairs are connected")
    if not is_connected_set(inst.graph, inst.reps):
        raise PatternError('the transversal does not induce a connected subgraph')

    g, reps = inst.graph, inst.reps
    missing = [(i, j) for i in range(5) for j in range(i + 1, 5)
               if not g.has_edge(reps[i], reps[j])]
    logger.debug(f"searching for {len(missing)} pattern edges the transversal lacks")
    verdict = solve(inst, TargetPattern.build(5, missing), budget, **options)
    if verdict.status == BUDGET_EXCEEDED:
        raise BudgetExceeded('budget ran out on a connected-transversal instance')
    if not verdict.sat:
        raise SolverError('connected-transversal instance has no certificate')

    violations = verify(inst, TargetPattern.full(h_graph(inst)), verdict.certificate)
    if violations:
        raise SolverError(f"certificate misses the full pattern: {violations[0].detail}")
    return verdict.certificate

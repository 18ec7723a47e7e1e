"""
Empirical check of the two conclusions drawn from a five-class instance
whose five representatives pairwise share a Kempe chain: the graph is
not planar, and it has K5 as a minor.
"""

from typing import Optional

from certificates.models import Budget
from generators.families import family
from kempe.chains import h_graph
from kempe.models import ColoredInstance
from utils.base.exceptions import InstanceError
from utils.base.logger import err_logger, logger

from .models import K33, K5, RemarkReport
from .search import euler_excludes, has_minor


def validate_remarks(inst: ColoredInstance, budget: Optional[Budget] = None) -> RemarkReport:
    if inst.k != 5:
        raise InstanceError(f"need exactly five classes, got {inst.k}", 'classes')
    g = inst.graph
    premises_ok = h_graph(inst).is_complete()

    k5 = has_minor(g, family('complete', 5), budget)
    pattern, witness = (K5, k5) if k5 is not None else (None, None)
    if witness is None:
        k33 = has_minor(g, family('complete_bipartite', 3, 3), budget)
        if k33 is not None:
            pattern, witness = K33, k33
    planar = witness is None
    if planar and euler_excludes(g):
        err_logger.error(f"no forbidden minor found in {g} although its edge count excludes planarity")

    consistent = not premises_ok or (not planar and k5 is not None)
    report = RemarkReport(premises_ok, planar, k5 is not None, k5, pattern, witness, consistent)
    if not consistent:
        err_logger.error(
            f"instance {inst.digest()} has a complete H but planar={planar}, "
            f"K5 minor={k5 is not None}")
    else:
        logger.debug(f"remarks on {inst.digest()}: premises={premises_ok} planar={planar}")
    return report

from typing import Optional

from django.conf import settings

from certificates.models import Budget, TargetPattern
from certificates.verifier import verify
from constructive.zsmall import z_small_certificate
from generators.enumeration import enumerate_upto
from graphs.codec import to_graph6
from kempe.chains import h_graph
from utils.base.constants import Z_SMALL_LIMIT
from utils.base.exceptions import SizeLimitError
from utils.base.logger import err_logger, logger
from utils.base.progress_bar import progressBar
from zmodel.doubling import z_of

from .models import SweepReport, SweepRow


def run_zsweep(max_n: int, budget: Optional[Budget] = None,
               progress: Optional[bool] = None) -> SweepReport:
    """
    Ladder certificate of the doubled graph of every graph on 1..max_n
    vertices, one row per isomorphism class, each re-checked by the
    verifier
    """
    if max_n > Z_SMALL_LIMIT:
        raise SizeLimitError('sweep vertex count', max_n, Z_SMALL_LIMIT)
    if progress is None:
        progress = settings.KEMPE_PROGRESS
    graphs = list(enumerate_upto(max_n))
    rows = []
    for g in progressBar(graphs, prefix=f"zsweep n<={max_n}", enabled=progress):
        z = z_of(g)
        strategy = z_small_certificate(z, budget)
        violations = verify(z.inst, TargetPattern.full(h_graph(z.inst)), strategy.certificate)
        if violations:
            err_logger.error(f"doubled graph of {to_graph6(g)}: {violations[0].detail}")
        rows.append(SweepRow(to_graph6(g), g.n, g.edge_count, strategy.rung,
                             strategy.path, not violations))
    report = SweepReport(max_n, tuple(rows))
    logger.info(f"zsweep n<={max_n}: {report.verified}/{report.total} verified, "
                f"{report.solver_fallbacks} solver fallbacks")
    return report

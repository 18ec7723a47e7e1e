"""
SAT-side reduction: keep one shortest two-colored path per pattern edge
and drop everything else. A certificate of the reduced instance lifts to
the original one, but not conversely, so a reduced instance can only be
searched through `solve_reduced`, which never reports UNSAT.
"""

from dataclasses import dataclass
from typing import Dict, Optional

from graphs.operations import shortest_path
from kempe.models import ColoredInstance
from kempe.transforms import sub_instance
from utils.base.exceptions import PatternError

from .models import Budget, RootedCertificate, SolveVerdict, TargetPattern
from .solver import solve


@dataclass(frozen=True)
class ReducedInstance:
    original: ColoredInstance
    inst: ColoredInstance
    # reduced vertex -> original vertex
    origin: Dict[int, int]

    def lift(self, cert: RootedCertificate) -> RootedCertificate:
        return RootedCertificate({
            self.origin[t]: frozenset(self.origin[v] for v in bag)
            for t, bag in cert.bags.items()})


def reduce_for_sat(inst: ColoredInstance, pat: TargetPattern) -> ReducedInstance:
    if pat.k != inst.k:
        raise PatternError(f"pattern has {pat.k} vertices, instance has {inst.k} classes")
    g = inst.graph
    keep = set(inst.reps)
    edges = set()
    for i, j in pat.edges:
        within = inst.class_masks[i] | inst.class_masks[j]
        path = shortest_path(g, inst.reps[i], inst.reps[j], within)
        if path is None:
            raise PatternError(f"classes {i} and {j} share no Kempe chain")
        keep.update(path)
        edges.update((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
    reduced, vmap = sub_instance(inst, keep, sorted(edges))
    return ReducedInstance(inst, reduced, {new: old for old, new in vmap.items()})


def solve_reduced(reduced: ReducedInstance, pat: TargetPattern,
                  budget: Optional[Budget] = None, **options) -> Optional[SolveVerdict]:
    """Search the reduced instance; a lifted SAT verdict or None"""
    verdict = solve(reduced.inst, pat, budget, **options)
    if not verdict.sat:
        return None
    return SolveVerdict(verdict.status, reduced.lift(verdict.certificate), verdict.stats)
"""
Constructive certificates for doubled graphs of bases with at most six
vertices.

The base graph is matched against a ladder of structural cases, each of
which writes down the bags directly. A five-vertex base with a spanning
cycle takes the rotation bags {(t, 1), (next t, 2)} before anything else.
The exact solver is the last rung and is only reached if every
structural case declines.
"""

from itertools import permutations
from typing import Callable, Iterator, List, Optional, Sequence, Set, Tuple

from certificates.models import BUDGET_EXCEEDED, Budget, RootedCertificate, TargetPattern
from certificates.solver import solve
from certificates.verifier import verify
from graphs.bits import iter_bits, lowest, mask_components, size
from graphs.models import Graph
from graphs.operations import components, cycle_rank, induced, is_connected
from kempe.chains import h_graph
from utils.base.constants import Z_SMALL_LIMIT
from utils.base.exceptions import BudgetExceeded, SizeLimitError, SolverError
from utils.base.logger import logger
from zmodel.doubling import z_of
from zmodel.models import ZInstance
from zmodel.permutations import find_good_permutation, permutation_certificate

from .cycles import unicyclic_certificate
from .matching import certificate_from_matching, find_good_matching, find_matchable_anticlique
from .models import (CUT_VERTEX, GOOD_MATCHING, GOOD_PERMUTATION, MATCHABLE_ANTICLIQUE,
                     SECTION_THREE, SOLVER, SPANNING_FIVE_CYCLE, SPANNING_SIX_CYCLE,
                     SPORADIC, WHEEL, StrategyReport)

ClassBags = List[Set[int]]
Found = Optional[Tuple[ClassBags, Tuple[str, ...]]]


def _root(x: int) -> int:
    return ZInstance.vertex(x, 1)


def _copy(x: int) -> int:
    return ZInstance.vertex(x, 2)


def _pair(x: int, y: int) -> Set[int]:
    """{(x, 1), (y, 2)}"""
    return {_root(x), _copy(y)}


def _plain(bags: Sequence) -> Found:
    return [set(bag) for bag in bags], ()


def _spanning_cycles(g: Graph, vertices: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Hamiltonian cycles of g[vertices], each once, starting at vertices[0]"""
    first, rest = vertices[0], vertices[1:]
    for tail in permutations(rest):
        if tail[0] > tail[-1]:
            continue
        order = (first,) + tail
        if all(g.has_edge(order[i], order[(i + 1) % len(order)]) for i in range(len(order))):
            yield order


def _rotation_bags(z: ZInstance, order: Sequence[int]) -> ClassBags:
    bags = [{_root(x)} for x in range(z.base.n)]
    for i, t in enumerate(order):
        bags[t] = _pair(t, order[(i + 1) % len(order)])
    return bags


def _sub_base(base: Graph, keep: Sequence[int], budget) -> Tuple[ClassBags, StrategyReport]:
    """Ladder on the base restricted to `keep`, bags mapped back to `base`"""
    sub, _ = induced(base, keep)
    z = z_of(sub)
    report = z_small_certificate(z, budget)
    keep = sorted(keep)
    bags = [{2 * keep[v // 2] + v % 2 for v in bag}
            for bag in report.certificate.class_bags(z.inst)]
    return bags, report


def _section_three(z: ZInstance, pat: TargetPattern, budget) -> Found:
    g = z.base
    for comp in components(g):
        sub, _ = induced(g, comp)
        if cycle_rank(sub) > 1:
            return None
    return _plain(unicyclic_certificate(z.inst, pat).class_bags(z.inst))


def _cut_vertex(z: ZInstance, pat: TargetPattern, budget) -> Found:
    g = z.base
    if not is_connected(g):
        bags: ClassBags = [set() for _ in range(g.n)]
        steps = []
        for comp in components(g):
            keep = sorted(comp)
            sub_bags, report = _sub_base(g, keep, budget)
            for i, x in enumerate(keep):
                bags[x] = sub_bags[i]
            steps.append(report.path)
        return bags, tuple(steps)
    if g.n < 3:
        return None

    for s in range(g.n):
        parts = mask_components(g.masks, g.vertex_mask & ~(1 << s))
        if len(parts) < 2:
            continue
        smallest = min(parts, key=lambda m: (size(m), lowest(m)))
        if size(smallest) > 2:
            continue
        members = list(iter_bits(smallest))
        bags = [set() for _ in range(g.n)]
        if len(members) == 1:
            t = members[0]
            bags[s] = {_root(s), _copy(s), _copy(t)}
            bags[t] = {_root(t)}
            removed = {s, t}
        else:
            t, u = members
            if g.has_edge(s, t) and g.has_edge(s, u):
                bags[t], bags[u] = _pair(t, u), _pair(u, t)
            else:
                if not g.has_edge(s, t):
                    t, u = u, t
                bags[t], bags[u] = {_root(t), _copy(t), _copy(u)}, {_root(u)}
            removed = {t, u}
        keep = [x for x in range(g.n) if x not in removed]
        sub_bags, report = _sub_base(g, keep, budget)
        for i, x in enumerate(keep):
            bags[x] = sub_bags[i]
        return bags, (report.path,)
    return None


def _matchable_anticlique(z: ZInstance, pat: TargetPattern, budget) -> Found:
    witness = find_matchable_anticlique(z.inst, pat)
    if witness is None:
        return None
    return _plain(certificate_from_matching(z.inst, witness).class_bags(z.inst))


def _spanning_five_cycle(z: ZInstance, pat: TargetPattern, budget) -> Found:
    if z.base.n != 5:
        return None
    for order in _spanning_cycles(z.base, range(5)):
        bags = _rotation_bags(z, order)
        if not verify(z.inst, pat, RootedCertificate.from_class_bags(z.inst, bags)):
            return _plain(bags)
    return None


def _spanning_six_cycle(z: ZInstance, pat: TargetPattern, budget) -> Found:
    g = z.base
    if g.n != 6:
        return None
    for order in _spanning_cycles(g, range(6)):
        if not any(g.has_edge(order[i], order[i + 3]) for i in range(3)):
            return _plain(_rotation_bags(z, order))
    return None


def _good_matching(z: ZInstance, pat: TargetPattern, budget) -> Found:
    if z.base.n != 6:
        return None
    matching = find_good_matching(pat)
    if matching is None:
        return None
    bags = [set() for _ in range(6)]
    for r, s in matching.edges:
        bags[r], bags[s] = _pair(r, s), _pair(s, r)
    return _plain(bags)


def _wheel(z: ZInstance, pat: TargetPattern, budget) -> Found:
    g = z.base
    if g.n != 6:
        return None
    for c in range(6):
        if g.degree(c) != 5:
            continue
        rim = [x for x in range(6) if x != c]
        for order in _spanning_cycles(g, rim):
            return _plain(_rotation_bags(z, order))
    return None


def _sporadic(z: ZInstance, pat: TargetPattern, budget) -> Found:
    # roles s, t, u, a, b, c
    if z.base.n != 6:
        return None
    for s, t, u, a, b, c in permutations(range(6)):
        bags = [set() for _ in range(6)]
        bags[s], bags[u] = _pair(s, u), _pair(u, s)
        bags[t], bags[c], bags[b] = _pair(t, c), _pair(c, b), _pair(b, t)
        bags[a] = {_root(a)}
        if not verify(z.inst, pat, RootedCertificate.from_class_bags(z.inst, bags)):
            return _plain(bags)
    return None


def _good_permutation(z: ZInstance, pat: TargetPattern, budget) -> Found:
    perm = find_good_permutation(z.base)
    if perm is None:
        return None
    return _plain(permutation_certificate(z, perm).class_bags(z.inst))


def _solver(z: ZInstance, pat: TargetPattern, budget) -> Found:
    verdict = solve(z.inst, pat, budget)
    if verdict.status == BUDGET_EXCEEDED:
        raise BudgetExceeded(f"solver budget ran out on a doubled graph of {z.base}")
    if not verdict.sat:
        raise SolverError(f"no certificate exists for the doubled graph of {z.base}")
    return _plain(verdict.certificate.class_bags(z.inst))


LADDER: Tuple[Tuple[str, Callable[..., Found]], ...] = (
    (SPANNING_FIVE_CYCLE, _spanning_five_cycle),
    (SECTION_THREE, _section_three),
    (CUT_VERTEX, _cut_vertex),
    (MATCHABLE_ANTICLIQUE, _matchable_anticlique),
    (SPANNING_SIX_CYCLE, _spanning_six_cycle),
    (GOOD_MATCHING, _good_matching),
    (WHEEL, _wheel),
    (SPORADIC, _sporadic),
    (GOOD_PERMUTATION, _good_permutation),
    (SOLVER, _solver),
)


def z_small_certificate(z: ZInstance, budget: Optional[Budget] = None) -> StrategyReport:
    """
    Certificate for the doubled graph of a base on at most six vertices,
    tagged with the rung that produced it. Every rung's bags are checked
    by the verifier before they are accepted.
    """
    if z.base.n > Z_SMALL_LIMIT:
        raise SizeLimitError('doubled-graph ladder base vertex count', z.base.n, Z_SMALL_LIMIT)
    pat = TargetPattern.full(h_graph(z.inst))
    attempts = []
    for rung, build in LADDER:
        found = build(z, pat, budget)
        if found is None:
            attempts.append(rung)
            continue
        bags, steps = found
        cert = RootedCertificate.from_class_bags(z.inst, bags)
        violations = verify(z.inst, pat, cert)
        if violations:
            logger.warning(f"rung {rung} built an invalid certificate: {violations[0].detail}")
            attempts.append(rung)
            continue
        if rung == SOLVER:
            logger.warning(f"no structural rung applies to {z.base}, used the solver")
        report = StrategyReport(rung, cert, tuple(attempts), steps)
        logger.debug(f"doubled graph of {z.base}: {report.path}")
        return report
    raise SolverError(f"no rung produced a certificate for {z.base}")

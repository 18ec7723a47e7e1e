"""
Counting certificate of non-existence for doubled graphs.

Suppose the doubled graph of a base with k vertices had a certificate for
the full pattern H, and H is triangle-free. The roots with singleton bags
form an anticlique A of H; every H-neighbor of A has a bag of at least
three vertices; every other bag has at least two. The bags then hold at
least

    |A| + 2 (k - |A| - |N(A)|) + 3 |N(A)| = 2k - |A| + |N(A)|

vertices, which exceeds the 2k available whenever |N(A)| >= |A| + 1. With
A empty every bag has exactly two vertices, which is a good permutation.
"""

from typing import List, Tuple

from graphs.bits import iter_bits, neighborhood, size
from graphs.models import Graph
from graphs.operations import girth, has_triangle, is_bipartite, is_connected
from kempe.chains import h_graph
from utils.base._types import Mask
from utils.base.logger import logger

from .models import (INCONCLUSIVE, UNSAT_CERTIFIED, AnticliqueBound,
                     CountingReport, ZInstance)
from .permutations import find_good_permutation


def independent_sets(g: Graph) -> List[Mask]:
    """All nonempty independent sets, in order of their smallest member
    then by extension"""
    found = []

    def extend(current: Mask, candidates: Mask) -> None:
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            chosen = current | low
            found.append(chosen)
            extend(chosen, candidates & ~g.masks[v])

    extend(0, g.vertex_mask)
    return found


def anticlique_bound(g: Graph, members: Mask) -> AnticliqueBound:
    k = g.n
    nbr = neighborhood(g.masks, members) & ~members
    ones, threes = size(members), size(nbr)
    twos = k - ones - threes
    return AnticliqueBound(
        members=tuple(iter_bits(members)),
        neighborhood=tuple(iter_bits(nbr)),
        size_one=ones, size_two=twos, size_three=threes,
        bound=ones + 2 * twos + 3 * threes,
        expanding=threes >= ones + 1)


def regular_girth_premises(g: Graph) -> bool:
    """Connected, d-regular with d >= 3, nonbipartite, girth at least 5"""
    if g.n == 0 or not is_connected(g):
        return False
    degrees = set(g.degrees())
    if len(degrees) != 1 or degrees.pop() < 3:
        return False
    shortest = girth(g)
    return not is_bipartite(g) and (shortest is None or shortest >= 5)


def counting_unsat_check(z: ZInstance) -> CountingReport:
    h = h_graph(z.inst).graph
    vertex_count = z.size
    premises = regular_girth_premises(z.base)

    if has_triangle(h):
        logger.debug('counting check not applicable: H has a triangle')
        return CountingReport(
            applicable=False, good_perm_exists=False, good_permutation=None,
            violating_anticlique=None, verdict=INCONCLUSIVE, vertex_count=vertex_count,
            min_bound=None, bounds=(), regular_premises=premises)

    perm = find_good_permutation(z.base)
    bounds: Tuple[AnticliqueBound, ...] = tuple(
        anticlique_bound(h, members) for members in independent_sets(h))
    violating = next((b.members for b in bounds if not b.expanding), None)
    min_bound = min((b.bound for b in bounds), default=None)

    certified = perm is None and violating is None
    report = CountingReport(
        applicable=True, good_perm_exists=perm is not None, good_permutation=perm,
        violating_anticlique=violating,
        verdict=UNSAT_CERTIFIED if certified else INCONCLUSIVE,
        vertex_count=vertex_count, min_bound=min_bound, bounds=bounds,
        regular_premises=premises)
    logger.debug(
        f"counting check: {report.verdict}, minimum bound {min_bound} "
        f"against {vertex_count} vertices")
    return report

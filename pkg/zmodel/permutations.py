"""
Good permutations of a base graph G. A permutation f is good when

(i)  x f(x) is an edge of G for every x, and
(ii) for every edge xy, f(x) is adjacent to y or to f(y), or f(y) is
     adjacent to x.

Good permutations are exactly the certificates of the doubled graph in
which every bag has two vertices: V_(x,1) = {(x,1), (f(x),2)}.
"""

from typing import Optional, Sequence, Tuple

from certificates.models import RootedCertificate, TargetPattern
from certificates.verifier import verify
from graphs.models import Graph
from kempe.chains import h_graph
from utils.base.constants import GOOD_PERMUTATION_LIMIT
from utils.base.exceptions import PermutationError, SizeLimitError, SolverError

from .models import GoodPermutation, ZInstance


def _bags_meet(g: Graph, x: int, fx: int, y: int, fy: int) -> bool:
    return g.has_edge(fx, y) or g.has_edge(fx, fy) or g.has_edge(fy, x)


def is_good_permutation(g: Graph, f: Sequence[int]) -> Tuple[bool, str]:
    """(True, '') or (False, the first failing condition)"""
    if sorted(f) != list(range(g.n)):
        return False, 'not a permutation of the base vertices'
    for x in range(g.n):
        if not g.has_edge(x, f[x]):
            return False, f"(i) fails at {x}: {x}-{f[x]} is not an edge"
    for x, y in g.edges:
        if not _bags_meet(g, x, f[x], y, f[y]):
            return False, f"(ii) fails at edge {x}-{y}"
    return True, ''


def find_good_permutation(g: Graph) -> Optional[GoodPermutation]:
    """
    Backtracking over the vertices in degree-descending order. Condition
    (ii) is checked on an edge as soon as both of its ends are assigned.
    """
    if g.n > GOOD_PERMUTATION_LIMIT:
        raise SizeLimitError('good permutation vertex count', g.n, GOOD_PERMUTATION_LIMIT)
    if g.n == 0:
        return GoodPermutation(())

    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    # edges to check once order[i] is assigned: those to earlier vertices
    closing = [[y for y in g.neighbors(x) if position[y] < position[x]] for x in order]

    f = [-1] * g.n
    taken = [False] * g.n

    def assign(i: int) -> bool:
        if i == g.n:
            return True
        x = order[i]
        for image in g.neighbors(x):
            if taken[image]:
                continue
            if all(_bags_meet(g, x, image, y, f[y]) for y in closing[i]):
                f[x] = image
                taken[image] = True
                if assign(i + 1):
                    return True
                taken[image] = False
                f[x] = -1
        return False

    if assign(0):
        return GoodPermutation(tuple(f))
    return None


def permutation_certificate(z: ZInstance, f: GoodPermutation) -> RootedCertificate:
    good, reason = is_good_permutation(z.base, f.f)
    if not good:
        raise PermutationError(reason)
    bags = [{z.vertex(x, 1), z.vertex(f.f[x], 2)} for x in range(z.base.n)]
    cert = RootedCertificate.from_class_bags(z.inst, bags)
    if verify(z.inst, TargetPattern.full(h_graph(z.inst)), cert):
        raise SolverError('good permutation produced an invalid certificate')
    return cert

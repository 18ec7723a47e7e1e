"""
The doubled graph Z(G): vertices V(G) x {1, 2}, with (x, i)(y, j) an
edge iff xy is an edge of G and not i = j = 1.
"""

from graphs.models import Graph
from graphs.operations import induced
from kempe.models import ColoredInstance
from utils.base.exceptions import GraphError

from .models import ZInstance


def z_of(g: Graph) -> ZInstance:
    if g.n < 1:
        raise GraphError('the doubled graph needs at least one base vertex')
    edges = []
    for x, y in g.edges:
        edges.append((2 * x + 1, 2 * y))
        edges.append((2 * x, 2 * y + 1))
        edges.append((2 * x + 1, 2 * y + 1))
    z = Graph.from_edges(2 * g.n, edges)
    classes = [[2 * x, 2 * x + 1] for x in range(g.n)]
    reps = [2 * x for x in range(g.n)]
    return ZInstance(g, ColoredInstance.build(z, classes, reps))


def bar(z: ZInstance, v: int) -> int:
    """(x, i) -> (x, 3 - i)"""
    if not 0 <= v < z.size:
        raise GraphError(f"vertex {v} is out of range for {z.size} vertices")
    return v ^ 1


def second_copy(z: ZInstance) -> Graph:
    """The copy induced on V(G) x {2}, isomorphic to the base via (x, 2) -> x"""
    copy, _ = induced(z.inst.graph, range(1, z.size, 2))
    return copy

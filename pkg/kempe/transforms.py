"""
Instance transformations: the two moves of the inheritance argument
(transversal edge completion and disjoint cliques) plus the restriction,
class removal and contraction steps the constructive recursions use.
"""

from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from graphs.bits import is_connected_mask, mask_of
from graphs.models import Graph
from graphs.operations import contract
from utils.base.constants import MAX_CLASSES
from utils.base.exceptions import TransformError

from .chains import h_graph
from .models import AddTransversalEdge, ColoredInstance, DisjointClique

TransformSpec = Union[AddTransversalEdge, DisjointClique]


def transform_instance(inst: ColoredInstance, spec: TransformSpec) -> ColoredInstance:
    if isinstance(spec, AddTransversalEdge):
        return _add_transversal_edge(inst, spec.i, spec.j)
    if isinstance(spec, DisjointClique):
        return _disjoint_clique(inst, spec.m)
    raise TransformError(f"unknown transformation {spec!r}")


def _add_transversal_edge(inst: ColoredInstance, i: int, j: int) -> ColoredInstance:
    if not (0 <= i < inst.k and 0 <= j < inst.k):
        raise TransformError(f"class pair ({i}, {j}) is out of range for {inst.k} classes")
    if i == j:
        raise TransformError(f"an edge inside class {i} would break the coloring")
    s, t = inst.reps[i], inst.reps[j]
    if inst.graph.has_edge(s, t):
        return inst
    graph = Graph.from_edges(inst.graph.n, inst.graph.edges + ((s, t),))
    return ColoredInstance(graph, inst.coloring, inst.transversal)


def _disjoint_clique(inst: ColoredInstance, m: int) -> ColoredInstance:
    if m < 1:
        raise TransformError(f"clique size must be positive, got {m}")
    if inst.k + m > MAX_CLASSES:
        raise TransformError(
            f"{inst.k + m} classes would exceed the limit of {MAX_CLASSES}")
    n = inst.graph.n
    fresh = list(range(n, n + m))
    edges = list(inst.graph.edges)
    edges.extend((u, v) for u in fresh for v in fresh if u < v)
    classes = inst.class_lists + [[v] for v in fresh]
    return ColoredInstance.build(
        Graph.from_edges(n + m, edges), classes, list(inst.reps) + fresh)


def complete_transversal(inst: ColoredInstance) -> ColoredInstance:
    """Join every pair of representatives whose classes are not adjacent in H"""
    h = h_graph(inst)
    for i in range(inst.k):
        for j in range(i + 1, inst.k):
            if not h.graph.has_edge(i, j):
                inst = _add_transversal_edge(inst, i, j)
    return inst


def sub_instance(inst: ColoredInstance, keep: Iterable[int],
                 edges: Optional[Iterable[Tuple[int, int]]] = None
                 ) -> Tuple[ColoredInstance, Dict[int, int]]:
    """
    Restrict to the vertices `keep`, which must contain every
    representative. With `edges`, only those edges of the induced
    subgraph are retained. Returns the instance and the old-to-new map.
    """
    kept = sorted(set(keep))
    missing = [r for r in inst.reps if r not in set(kept)]
    if missing:
        raise TransformError(f"representatives {missing} must be kept")
    vmap = {v: i for i, v in enumerate(kept)}
    source = inst.graph.edges if edges is None else edges
    new_edges = []
    for u, v in source:
        if not inst.graph.has_edge(u, v):
            raise TransformError(f"{u}-{v} is not an edge of the instance")
        if u in vmap and v in vmap:
            new_edges.append((vmap[u], vmap[v]))
    classes = [[vmap[v] for v in sorted(members) if v in vmap]
               for members in inst.coloring.classes]
    reps = [vmap[r] for r in inst.reps]
    graph = Graph.from_edges(len(kept), sorted(set(
        (min(e), max(e)) for e in new_edges)))
    return ColoredInstance.build(graph, classes, reps), vmap


def drop_classes(inst: ColoredInstance, classes: Iterable[int]
                 ) -> Tuple[ColoredInstance, Dict[int, int], Dict[int, int]]:
    """
    Delete whole color classes. Remaining classes keep their relative
    order. Returns the instance, the vertex map and the class map.
    """
    dropped = set(classes)
    for c in dropped:
        if not 0 <= c < inst.k:
            raise TransformError(f"class {c} is out of range for {inst.k} classes")
    if len(dropped) == inst.k:
        raise TransformError('cannot drop every class')
    cmap = {}
    for c in range(inst.k):
        if c not in dropped:
            cmap[c] = len(cmap)
    keep = [v for v in range(inst.graph.n) if inst.class_of(v) not in dropped]
    vmap = {v: i for i, v in enumerate(keep)}
    edges = [(vmap[u], vmap[v]) for u, v in inst.graph.edges
             if u in vmap and v in vmap]
    new_classes = [[vmap[v] for v in sorted(inst.coloring.classes[c])] for c in cmap]
    reps = [vmap[inst.reps[c]] for c in cmap]
    return (ColoredInstance.build(Graph.from_edges(len(keep), edges), new_classes, reps),
            vmap, cmap)


def contract_instance(inst: ColoredInstance, part: Sequence[int], cls: int
                      ) -> Tuple[ColoredInstance, Dict[int, int]]:
    """
    Contract the connected vertex set `part` into one vertex of class
    `cls`. A representative inside the part must belong to `cls` and
    stays the representative of the merged vertex.
    """
    members = set(part)
    if not 0 <= cls < inst.k:
        raise TransformError(f"class {cls} is out of range for {inst.k} classes")
    if not is_connected_mask(inst.graph.masks, mask_of(members)):
        raise TransformError(f"part {sorted(members)} is not connected")
    for index, r in enumerate(inst.reps):
        if r in members and index != cls:
            raise TransformError(
                f"part holds the representative of class {index}, not of {cls}")
        if index != cls and inst.coloring.classes[index] <= members:
            raise TransformError(f"contraction would empty class {index}")

    graph, vmap = contract(inst.graph, [members])
    merged = vmap[next(iter(members))]

    classes = [set() for _ in range(inst.k)]
    for v in range(inst.graph.n):
        if v not in members:
            classes[inst.class_of(v)].add(vmap[v])
    classes[cls].add(merged)
    if graph.masks[merged] & mask_of(classes[cls]):
        raise TransformError(
            f"merged vertex would be adjacent to its own class {cls}")

    reps = [vmap[r] for r in inst.reps]
    return ColoredInstance.build(graph, [sorted(c) for c in classes], reps), vmap

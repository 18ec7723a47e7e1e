"""
Certificates for cycle patterns and for patterns whose components carry
at most one cycle each.

Both builders recurse on smaller instances. An instance is first cut
down to one shortest two-colored path per pattern edge. A non-root
vertex that lies on a single path is contracted together with its two
path neighbors. When neither step applies and some class still has more
than one vertex, the transversal is peeled off a cycle: every root is
deleted and the vertex next to it on the outgoing path becomes the root
of the following class.
"""

from itertools import chain
from typing import Dict, Iterable, List, Sequence, Set

from certificates.models import RootedCertificate, TargetPattern
from certificates.reduction import ReducedInstance, reduce_for_sat
from graphs.models import Graph
from graphs.operations import components, cycle_rank, induced, shortest_path
from kempe.chains import shares_chain
from kempe.models import ColoredInstance
from kempe.transforms import contract_instance, drop_classes
from utils.base.exceptions import PatternError
from utils.base.logger import logger

ClassBags = List[Set[int]]


def _preimages(vmap: Dict[int, int]) -> Dict[int, List[int]]:
    groups: Dict[int, List[int]] = {}
    for old, new in vmap.items():
        groups.setdefault(new, []).append(old)
    return groups


def _lift(bags: Sequence[Iterable[int]], groups: Dict[int, Iterable[int]]) -> ClassBags:
    return [set(chain.from_iterable(groups[v] for v in bag)) for bag in bags]


def _shrunk(inst: ColoredInstance, reduced: ReducedInstance) -> bool:
    small = reduced.inst.graph
    return small.n < inst.graph.n or small.edge_count < inst.graph.edge_count


def _lift_reduced(bags: ClassBags, reduced: ReducedInstance) -> ClassBags:
    return _lift(bags, {new: (old,) for new, old in reduced.origin.items()})


def _single_path_vertex(inst: ColoredInstance):
    """Smallest non-root of degree two whose neighbors share a class"""
    g = inst.graph
    roots = inst.rep_mask
    for x in range(g.n):
        if roots >> x & 1 or g.degree(x) != 2:
            continue
        y, z = g.neighbors(x)
        if inst.class_of(y) == inst.class_of(z):
            return x
    return None


def _contract_at(inst: ColoredInstance, x: int):
    y, z = inst.graph.neighbors(x)
    return contract_instance(inst, [y, x, z], inst.class_of(y))


def _ring_bags(inst: ColoredInstance, ring: Sequence[int]) -> ClassBags:
    """Class-indexed bags for an instance whose classes are exactly `ring`"""
    edges = [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    reduced = reduce_for_sat(inst, TargetPattern.build(inst.k, edges))
    if _shrunk(inst, reduced):
        return _lift_reduced(_ring_bags(reduced.inst, ring), reduced)

    x = _single_path_vertex(inst)
    if x is not None:
        smaller, vmap = _contract_at(inst, x)
        return _lift(_ring_bags(smaller, ring), _preimages(vmap))

    if inst.graph.n == inst.k:
        return [{r} for r in inst.reps]
    return _peel(inst, ring)


def _peel(inst: ColoredInstance, ring: Sequence[int]) -> ClassBags:
    # every non-root lies on both of its paths and all classes have equal size
    g, reps = inst.graph, inst.reps
    next_reps = [0] * inst.k
    for pos, c in enumerate(ring):
        prev = ring[pos - 1]
        within = inst.class_masks[prev] | inst.class_masks[c]
        next_reps[c] = shortest_path(g, reps[prev], reps[c], within)[1]

    keep = [v for v in range(g.n) if not inst.rep_mask >> v & 1]
    inner_graph, vmap = induced(g, keep)
    classes = [[vmap[v] for v in sorted(members) if v in vmap]
               for members in inst.coloring.classes]
    inner = ColoredInstance.build(inner_graph, classes, [vmap[r] for r in next_reps])
    lifted = _lift(_ring_bags(inner, ring), {new: (old,) for old, new in vmap.items()})

    bags: ClassBags = [set() for _ in range(inst.k)]
    for pos, c in enumerate(ring):
        prev = ring[pos - 1]
        bags[prev] = lifted[c] | {reps[prev]}
    return bags


def cycle_certificate(inst: ColoredInstance, ring: Sequence[int]) -> RootedCertificate:
    """
    Certificate for the cycle pattern through the classes of `ring` in
    order. Consecutive classes must share a Kempe chain; classes off the
    ring get their root as a singleton bag.
    """
    ring = list(ring)
    if len(ring) < 3:
        raise PatternError(f"a ring needs at least three classes, got {len(ring)}")
    if len(set(ring)) != len(ring):
        raise PatternError(f"ring {ring} repeats a class")
    for c in ring:
        if not 0 <= c < inst.k:
            raise PatternError(f"class {c} is out of range for {inst.k} classes")
    for pos, c in enumerate(ring):
        nxt = ring[(pos + 1) % len(ring)]
        if not shares_chain(inst, c, nxt):
            raise PatternError(f"classes {c} and {nxt} share no Kempe chain")

    bags: ClassBags = [{r} for r in inst.reps]
    outside = [c for c in range(inst.k) if c not in ring]
    if outside:
        core, vmap, cmap = drop_classes(inst, outside)
        inner = _lift(_ring_bags(core, [cmap[c] for c in ring]), _preimages(vmap))
        for c in ring:
            bags[c] = inner[cmap[c]]
    else:
        bags = _ring_bags(inst, ring)
    logger.debug(f"cycle certificate through classes {ring}")
    return RootedCertificate.from_class_bags(inst, bags)


def _ring_order(pattern: Graph) -> List[int]:
    """Vertices of a connected two-regular pattern in cycle order from 0"""
    order = [0]
    prev, cur = None, 0
    while True:
        nxt = next(v for v in pattern.neighbors(cur) if v != prev)
        if nxt == 0:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _unicyclic_bags(inst: ColoredInstance, pattern: Graph) -> ClassBags:
    """Bags for a connected pattern with at most one cycle on all classes"""
    if inst.k == 1:
        return [{inst.reps[0]}]
    reduced = reduce_for_sat(inst, TargetPattern.from_graph(pattern))
    if _shrunk(inst, reduced):
        return _lift_reduced(_unicyclic_bags(reduced.inst, pattern), reduced)

    leaves = [v for v in range(pattern.n) if pattern.degree(v) == 1]
    if not leaves:
        return _ring_bags(inst, _ring_order(pattern))

    q = leaves[0]
    others = sorted(inst.coloring.classes[q] - {inst.reps[q]})
    if others:
        # a non-root of a leaf class lies on the single path to its neighbor
        smaller, vmap = _contract_at(inst, others[0])
        return _lift(_unicyclic_bags(smaller, pattern), _preimages(vmap))

    core, vmap, cmap = drop_classes(inst, [q])
    rest = Graph.from_edges(pattern.n - 1, [
        (cmap[a], cmap[b]) for a, b in pattern.edges if q not in (a, b)])
    inner = _lift(_unicyclic_bags(core, rest), _preimages(vmap))
    bags: ClassBags = [set() for _ in range(inst.k)]
    for c, new in cmap.items():
        bags[c] = inner[new]
    bags[q] = {inst.reps[q]}
    return bags


def unicyclic_certificate(inst: ColoredInstance, pat: TargetPattern) -> RootedCertificate:
    """
    Certificate for a pattern each of whose components has at most one
    cycle. Components are solved one at a time with the other classes
    deleted.
    """
    pat.check_fits(inst)
    graph = pat.graph
    parts = [sorted(comp) for comp in components(graph)]
    for comp in parts:
        sub, _ = induced(graph, comp)
        rank = cycle_rank(sub)
        if rank > 1:
            raise PatternError(f"pattern component {comp} has {rank} independent cycles")

    bags: ClassBags = [{r} for r in inst.reps]
    for comp in parts:
        if len(comp) == 1:
            continue
        outside = [c for c in range(inst.k) if c not in set(comp)]
        if outside:
            core, vmap, cmap = drop_classes(inst, outside)
        else:
            core, vmap, cmap = inst, {v: v for v in range(inst.graph.n)}, {c: c for c in comp}
        local = Graph.from_edges(len(comp), [
            (cmap[a], cmap[b]) for a, b in pat.edges if a in cmap and b in cmap])
        inner = _lift(_unicyclic_bags(core, local), _preimages(vmap))
        for c in comp:
            bags[c] = inner[cmap[c]]
    logger.debug(f"certificate for a pattern with {len(parts)} unicyclic components")
    return RootedCertificate.from_class_bags(inst, bags)

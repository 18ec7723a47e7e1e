"""
Unrooted minor containment and planarity through the two forbidden
minors.

The host is first cleaned up: when every pattern vertex has degree at
least two, host vertices of degree at most one are deleted, and when it
is at least three, host vertices of degree two are contracted into a
neighbor. The root of each bag is then fixed as its smallest vertex in
a degree-descending relabelling of the host, and the bag-growth search
of the rooted solver completes the bags.
"""

import time
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from certificates.models import Budget, Violation
from certificates.search import BagSearch, BudgetExhausted, SearchProblem
from generators.families import family
from graphs.bits import iter_bits, mask_components, mask_of, neighborhood
from graphs.models import Graph
from graphs.operations import components, contract, has_triangle, induced, is_connected, relabel
from utils.base.constants import MINOR_HOST_LIMIT, MINOR_PATTERN_LIMIT
from utils.base.exceptions import BudgetExceeded, SizeLimitError
from utils.base.logger import logger

from .models import K5, K33, MinorEmbedding

Groups = List[FrozenSet[int]]


def _reduce_host(g: Graph, min_degree: int) -> Tuple[Graph, Groups]:
    """Cleaned-up host and, per new vertex, the host vertices it stands for"""
    groups: Groups = [frozenset({v}) for v in range(g.n)]
    while True:
        if min_degree >= 2 and any(d <= 1 for d in g.degrees()):
            keep = [v for v in range(g.n) if g.degree(v) > 1]
            g, _ = induced(g, keep)
            groups = [groups[v] for v in keep]
            continue
        if min_degree >= 3:
            v = next((v for v in range(g.n) if g.degree(v) == 2), None)
            if v is not None:
                g2, vmap = contract(g, [[v, min(g.neighbors(v))]])
                merged = [set() for _ in range(g2.n)]
                for old, new in vmap.items():
                    merged[new] |= groups[old]
                g, groups = g2, [frozenset(m) for m in merged]
                continue
        return g, groups


def _twin_of(pattern: Graph, order: List[int]) -> Dict[int, int]:
    """Position i -> latest earlier position holding a twin of order[i]"""
    twins = {}
    for i, u in enumerate(order):
        for j in range(i - 1, -1, -1):
            w = order[j]
            if pattern.masks[u] & ~(1 << w) == pattern.masks[w] & ~(1 << u):
                twins[i] = j
                break
    return twins


def _root_assignments(host: Graph, k: int, twins: Dict[int, int]) -> Iterator[Tuple[int, ...]]:
    roots: List[int] = []

    def extend(i: int) -> Iterator[Tuple[int, ...]]:
        if i == k:
            yield tuple(roots)
            return
        low = roots[twins[i]] + 1 if i in twins else 0
        for v in range(low, host.n):
            if v in roots:
                continue
            roots.append(v)
            yield from extend(i + 1)
            roots.pop()

    return extend(0)


class _MinorSearch:
    """Shared node and time budget over every root assignment"""

    def __init__(self, pattern: Graph, budget: Budget):
        self.pattern = pattern
        self.budget = budget
        self.nodes = 0
        self.started = time.monotonic()
        self.order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
        position = {v: i for i, v in enumerate(self.order)}
        self.edges = tuple(sorted(
            (min(position[u], position[v]), max(position[u], position[v]))
            for u, v in pattern.edges))
        self.twins = _twin_of(pattern, self.order)

    def search(self, host: Graph) -> Optional[Dict[int, FrozenSet[int]]]:
        """Bags by pattern vertex in host labels, or None"""
        by_degree = sorted(range(host.n), key=lambda v: (-host.degree(v), v))
        ranked = relabel(host, [by_degree.index(v) for v in range(host.n)])
        everything = ranked.vertex_mask
        for roots in _root_assignments(ranked, self.pattern.n, self.twins):
            root_mask = mask_of(roots)
            allowed = tuple(everything & ~((2 << r) - 1) & ~root_mask for r in roots)
            problem = SearchProblem(ranked.masks, roots, self.edges, allowed)
            bags = self._run(problem)
            if bags is not None:
                return {self.order[i]: frozenset(by_degree[v] for v in iter_bits(bag))
                        for i, bag in enumerate(bags)}
        return None

    def _run(self, problem: SearchProblem):
        elapsed = time.monotonic() - self.started
        nodes_left = self.budget.nodes - self.nodes
        if nodes_left <= 0 or elapsed >= self.budget.seconds:
            raise BudgetExceeded(f"minor search budget ran out after {self.nodes} nodes")
        engine = BagSearch(problem, nodes_left, self.budget.seconds - elapsed)
        try:
            return engine.run()
        except BudgetExhausted as exc:
            raise BudgetExceeded(f"minor search stopped: {exc}")
        finally:
            self.nodes += engine.nodes


def has_minor(g: Graph, h: Graph, budget: Optional[Budget] = None) -> Optional[MinorEmbedding]:
    """
    An embedding of `h` as a minor of `g`, or None once the search is
    exhausted. Raises BudgetExceeded when the budget runs out first.
    """
    if h.n > MINOR_PATTERN_LIMIT:
        raise SizeLimitError('minor pattern vertex count', h.n, MINOR_PATTERN_LIMIT)
    if g.n > MINOR_HOST_LIMIT:
        raise SizeLimitError('minor host vertex count', g.n, MINOR_HOST_LIMIT)
    if h.n == 0:
        return MinorEmbedding({})
    if h.n > g.n or h.edge_count > g.edge_count:
        return None

    if is_connected(h):
        hosts = [sorted(comp) for comp in components(g)]
    else:
        hosts = [list(range(g.n))]
    min_degree = min(h.degrees())
    engine = _MinorSearch(h, budget or Budget.default())

    for keep in hosts:
        part, _ = induced(g, keep)
        reduced, groups = _reduce_host(part, min_degree)
        if reduced.n < h.n or reduced.edge_count < h.edge_count:
            continue
        bags = engine.search(reduced)
        if bags is not None:
            emb = MinorEmbedding({
                v: frozenset(keep[x] for u in bag for x in groups[u])
                for v, bag in bags.items()})
            logger.debug(f"{h} is a minor of {g} after {engine.nodes} nodes")
            return emb
    logger.debug(f"{h} is not a minor of {g}, {engine.nodes} nodes")
    return None


def check_embedding(g: Graph, h: Graph, emb: MinorEmbedding) -> List[Violation]:
    """Violated minor conditions; empty means `emb` is a model of h in g"""
    violations = []
    for v in sorted(emb.bags):
        if not 0 <= v < h.n:
            violations.append(Violation('unknown-root', f"{v} is not a pattern vertex", (v,)))

    masks = {}
    for v in range(h.n):
        bag = emb.bags.get(v)
        if bag is None:
            violations.append(Violation('missing-bag', f"no bag for pattern vertex {v}", (v,)))
            continue
        outside = sorted(x for x in bag if not 0 <= x < g.n)
        if outside:
            violations.append(Violation(
                'out-of-range', f"bag of {v} has vertices outside the graph", tuple(outside)))
        inside = [x for x in bag if 0 <= x < g.n]
        if not inside:
            violations.append(Violation('empty', f"bag of {v} is empty", (v,)))
            continue
        masks[v] = mask_of(inside)

    owners: Dict[int, List[int]] = {}
    for v, mask in masks.items():
        for x in iter_bits(mask):
            owners.setdefault(x, []).append(v)
    for x in sorted(owners):
        if len(owners[x]) > 1:
            violations.append(Violation(
                'overlap', f"vertex {x} lies in the bags of {sorted(owners[x])}",
                (x,) + tuple(sorted(owners[x]))))

    for v, mask in masks.items():
        parts = mask_components(g.masks, mask)
        if len(parts) > 1:
            violations.append(Violation(
                'disconnected', f"bag of {v} has {len(parts)} components",
                tuple(tuple(iter_bits(p)) for p in parts)))

    for u, v in h.edges:
        if u in masks and v in masks and not neighborhood(g.masks, masks[u]) & masks[v]:
            violations.append(Violation(
                'uncovered', f"no edge joins the bags of {u} and {v}", (u, v)))
    return violations


def euler_excludes(g: Graph) -> bool:
    """Whether the edge count alone rules out a plane drawing"""
    if g.n < 3:
        return False
    if g.edge_count > 3 * g.n - 6:
        return True
    return not has_triangle(g) and g.edge_count > 2 * g.n - 4


def nonplanarity_witness(g: Graph, budget: Optional[Budget] = None
                         ) -> Optional[Tuple[str, MinorEmbedding]]:
    for name, pattern in ((K5, family('complete', 5)), (K33, family('complete_bipartite', 3, 3))):
        emb = has_minor(g, pattern, budget)
        if emb is not None:
            return name, emb
    return None


def is_planar(g: Graph, budget: Optional[Budget] = None) -> bool:
    """True iff neither K5 nor K3,3 is a minor of g"""
    if g.n > MINOR_HOST_LIMIT:
        raise SizeLimitError('minor host vertex count', g.n, MINOR_HOST_LIMIT)
    if g.n <= 4:
        return True
    if euler_excludes(g):
        return False
    return nonplanarity_witness(g, budget) is None

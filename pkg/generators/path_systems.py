import random

from graphs.bits import bit, reach
from graphs.models import Graph
from graphs.operations import components, induced
from kempe.models import ColoredInstance
from utils.base.logger import logger

from .models import PathSystem, PathSystemSpec


class _Builder:
    """Mutable graph under construction; class i has representative i"""

    def __init__(self, k: int):
        self.class_of = list(range(k))
        self.adj = [0] * k

    @property
    def n(self) -> int:
        return len(self.class_of)

    def add_vertex(self, cls: int) -> int:
        self.class_of.append(cls)
        self.adj.append(0)
        return self.n - 1

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u] |= bit(v)
        self.adj[v] |= bit(u)

    def class_mask(self, *classes) -> int:
        return sum(bit(v) for v, c in enumerate(self.class_of) if c in classes)

    def linked(self, a: int, b: int) -> bool:
        """Whether representatives a and b share a Kempe chain"""
        return bool(reach(self.adj, bit(a), self.class_mask(a, b)) >> b & 1)


def build_path_system(spec: PathSystemSpec) -> PathSystem:
    """
    Sample an instance whose H contains the pattern as a spanning
    subgraph. Extra edges that would link the representatives of a
    non-pattern class pair are rejected and counted.
    """
    rng = random.Random(spec.seed)
    pattern = spec.pattern
    k = pattern.n
    builder = _Builder(k)

    for s, t in pattern.edges:
        internal = rng.choice(range(0, spec.max_internal + 1, 2))
        previous = s
        for step in range(1, internal + 1):
            v = builder.add_vertex(t if step % 2 else s)
            builder.add_edge(previous, v)
            previous = v
        builder.add_edge(previous, t)

    added = rejected = 0
    if spec.extra_edge_prob > 0:
        for v in range(builder.n):
            for u in range(v):
                cu, cv = builder.class_of[u], builder.class_of[v]
                if cu == cv or builder.adj[u] >> v & 1:
                    continue
                if rng.random() >= spec.extra_edge_prob:
                    continue
                builder.add_edge(u, v)
                pair = (min(cu, cv), max(cu, cv))
                if not spec.kempe_complete and not pattern.has_edge(*pair) \
                        and builder.linked(*pair):
                    builder.adj[u] &= ~bit(v)
                    builder.adj[v] &= ~bit(u)
                    rejected += 1
                else:
                    added += 1

    if spec.kempe_complete:
        for a in range(k):
            for b in range(a + 1, k):
                _connect_pair(builder, a, b)

    graph = Graph.from_masks(builder.adj)
    classes = [[v for v in range(builder.n) if builder.class_of[v] == c] for c in range(k)]
    inst = ColoredInstance.build(graph, classes, range(k))
    if rejected:
        logger.debug(f"path system seed={spec.seed}: rejected {rejected} extra edges")
    return PathSystem(inst, spec, added, rejected)


def _connect_pair(builder: _Builder, a: int, b: int) -> None:
    """Join the components of G[A_a ∪ A_b] to the one holding
    representative a, always by an edge across the two classes"""
    while True:
        within = builder.class_mask(a, b)
        graph = Graph.from_masks(builder.adj)
        keep = [v for v in range(builder.n) if within >> v & 1]
        sub, vmap = induced(graph, keep)
        back = {new: old for old, new in vmap.items()}
        parts = [sorted(back[v] for v in part) for part in components(sub)]
        if len(parts) == 1:
            return
        main = next(p for p in parts if a in p)
        others = [p for p in parts if p is not main]
        with_b = [p for p in others if any(builder.class_of[v] == b for v in p)]
        if with_b:
            u = min(v for v in with_b[0] if builder.class_of[v] == b)
            builder.add_edge(a, u)
        else:
            w = min(v for v in main if builder.class_of[v] == b)
            builder.add_edge(others[0][0], w)


def random_path_system(spec: PathSystemSpec) -> ColoredInstance:
    return build_path_system(spec).instance

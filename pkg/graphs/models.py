"""
Domain types of the graph core. Nothing here is stored in a database;
the models are immutable values shared freely between threads and
worker processes.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Sequence, Tuple

from utils.base._types import Edge, Mask
from utils.base.constants import MAX_GRAPH_VERTICES
from utils.base.exceptions import GraphError, SizeLimitError

from .bits import iter_bits, mask_of


@dataclass(frozen=True)
class Graph:
    """
    Finite undirected simple graph on the vertices 0..n-1.

    `adjacency[v]` is the sorted tuple of neighbors of v. Construction
    validates simplicity and symmetry; use `from_edges` or `from_masks`
    rather than building the adjacency by hand.
    """
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    masks: Tuple[Mask, ...] = field(
        init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if self.n > MAX_GRAPH_VERTICES:
            raise SizeLimitError('vertex count', self.n, MAX_GRAPH_VERTICES)
        if len(self.adjacency) != self.n:
            raise GraphError(
                f"adjacency has {len(self.adjacency)} rows for {self.n} vertices")

        masks = []
        for v, row in enumerate(self.adjacency):
            if list(row) != sorted(set(row)):
                raise GraphError(f"neighbors of {v} must be sorted and distinct")
            for u in row:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} is out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
            masks.append(mask_of(row))

        for v, row in enumerate(self.adjacency):
            for u in row:
                if not masks[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

        object.__setattr__(self, 'masks', tuple(masks))

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls(n, tuple(() for _ in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> 'Graph':
        """
        Build a graph from an edge list. Loops, out-of-range endpoints and
        repeated edges are rejected.
        """
        if n > MAX_GRAPH_VERTICES:
            raise SizeLimitError('vertex count', n, MAX_GRAPH_VERTICES)
        rows = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} is out of range for {n} vertices")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in rows[u]:
                raise GraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(tuple(sorted(row)) for row in rows))

    @classmethod
    def from_masks(cls, masks: Sequence[Mask]) -> 'Graph':
        """Build from neighbor bitmasks; diagonal bits are dropped"""
        n = len(masks)
        rows = []
        for v, m in enumerate(masks):
            rows.append(tuple(u for u in iter_bits(m & ~(1 << v))))
        return cls(n, tuple(rows))

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """All edges as (u, v) with u < v, sorted"""
        return tuple(
            (u, v) for u, row in enumerate(self.adjacency) for v in row if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    @property
    def vertex_mask(self) -> Mask:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def vertex_set(self, vertices: Iterable[int]) -> FrozenSet[int]:
        """Frozen set of `vertices`, checked against the vertex range"""
        members = frozenset(vertices)
        for v in members:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} is out of range for {self.n} vertices")
        return members

    def to_dict(self) -> dict:
        return {'n': self.n, 'edges': [list(e) for e in self.edges]}

    def __str__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

"""
Structural primitives on `Graph` values. All functions are pure.
"""

from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from utils.base.constants import CANONICAL_KEY_LIMIT
from utils.base.exceptions import GraphError, SizeLimitError

from .bits import is_connected_mask, iter_bits, mask_components, mask_of
from .models import Graph


def components(g: Graph) -> List[frozenset]:
    """Connected components ordered by smallest member"""
    return [frozenset(iter_bits(m))
            for m in mask_components(g.masks, g.vertex_mask)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or is_connected_mask(g.masks, g.vertex_mask)


def is_connected_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff `vertices` is nonempty and induces a connected subgraph"""
    return is_connected_mask(g.masks, mask_of(vertices))


def contract(g: Graph, parts: Sequence[Iterable[int]]) -> Tuple[Graph, Dict[int, int]]:
    """
    Contract every part to a single vertex.

    New indices follow the smallest original member of each unit, a unit
    being a part or an untouched vertex. Parallel edges merge and loops
    inside a part vanish. Returns the contracted graph and the map from
    old to new vertex.
    """
    owner = {}
    part_masks = []
    for index, part in enumerate(parts):
        members = g.vertex_set(part)
        if not members:
            raise GraphError(f"part {index} is empty")
        for v in members:
            if v in owner:
                raise GraphError(
                    f"vertex {v} is in parts {owner[v]} and {index}")
            owner[v] = index
        mask = mask_of(members)
        if not is_connected_mask(g.masks, mask):
            raise GraphError(f"part {index} does not induce a connected subgraph")
        part_masks.append(mask)

    units = [(min(iter_bits(m)), m) for m in part_masks]
    units.extend((v, 1 << v) for v in range(g.n) if v not in owner)
    units.sort()

    vmap = {}
    for new, (_, mask) in enumerate(units):
        for v in iter_bits(mask):
            vmap[v] = new

    rows = [0] * len(units)
    for u, v in g.edges:
        a, b = vmap[u], vmap[v]
        if a != b:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return Graph.from_masks(rows), vmap


def induced(g: Graph, vertices: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Subgraph induced by `vertices`, relabelled in increasing order"""
    keep = sorted(g.vertex_set(vertices))
    vmap = {v: i for i, v in enumerate(keep)}
    edges = [(vmap[u], vmap[v]) for u, v in g.edges if u in vmap and v in vmap]
    return Graph.from_edges(len(keep), edges), vmap


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of `g` under the vertex map v -> perm[v]"""
    if sorted(perm) != list(range(g.n)):
        raise GraphError('relabelling is not a permutation')
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, None for forests"""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_bipartite(g: Graph) -> bool:
    side = {}
    for root in range(g.n):
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def has_triangle(g: Graph) -> bool:
    return any(g.masks[u] & g.masks[v] for u, v in g.edges)


def cycle_rank(g: Graph) -> int:
    """Number of independent cycles, |E| - |V| + #components"""
    return g.edge_count - g.n + len(components(g))


def shortest_path(g: Graph, source: int, target: int, within: int) -> Optional[List[int]]:
    """
    Shortest source-target path inside the vertex mask `within`, found by
    BFS that scans neighbors in increasing order. None if disconnected.
    """
    if not (within >> source & 1 and within >> target & 1):
        return None
    parent = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for w in g.adjacency[u]:
            if within >> w & 1 and w not in parent:
                parent[w] = u
                queue.append(w)
    if target not in parent:
        return None
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    return path[::-1]


def canonical_key(g: Graph) -> bytes:
    """
    Canonical form: one byte holding n, then the column-ordered upper
    triangle of the adjacency matrix, lexicographically minimal over all
    vertex orders, packed into bytes.

    Exhaustive branch and bound over vertex orders; at each position only
    one vertex per class of twins (equal open or closed neighborhoods) is
    tried, since swapping twins is an automorphism.
    """
    n = g.n
    if n > CANONICAL_KEY_LIMIT:
        raise SizeLimitError('canonical key vertex count', n, CANONICAL_KEY_LIMIT)

    masks = g.masks
    best: List[Tuple[int, ...]] = []
    order: List[int] = []

    def twins(u: int, v: int) -> bool:
        return masks[u] & ~(1 << v) == masks[v] & ~(1 << u)

    def search(remaining: int) -> None:
        nonlocal best
        depth = len(order)
        if not remaining:
            if not best or columns < best:
                best = list(columns)
            return

        options = []
        tried = []
        for v in iter_bits(remaining):
            if any(twins(v, w) for w in tried):
                continue
            tried.append(v)
            column = tuple(masks[order[i]] >> v & 1 for i in range(depth))
            options.append((column, v))
        options.sort()

        for column, v in options:
            # only a prefix equal to the best so far can lose
            if best and columns == best[:depth] and column > best[depth]:
                break
            order.append(v)
            columns.append(column)
            search(remaining & ~(1 << v))
            order.pop()
            columns.pop()

    columns: List[Tuple[int, ...]] = []
    search(g.vertex_mask)

    flat = [b for column in best for b in column]
    packed = bytearray([n])
    for start in range(0, len(flat), 8):
        chunk = flat[start:start + 8]
        value = 0
        for b in chunk:
            value = value << 1 | b
        packed.append(value << (8 - len(chunk)))
    return bytes(packed)

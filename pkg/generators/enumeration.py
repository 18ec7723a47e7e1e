from functools import lru_cache
from typing import Iterator, Tuple

from graphs.bits import iter_bits
from graphs.models import Graph
from graphs.operations import canonical_key
from utils.base.constants import ENUMERATION_LIMIT
from utils.base.exceptions import SizeLimitError


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[Graph, ...]:
    """
    One graph per isomorphism class on n vertices, grown from the classes
    on n - 1 vertices by adding a last vertex with every neighbor set
    """
    if n == 0:
        return (Graph.empty(0),)
    seen = set()
    found = []
    for smaller in _classes(n - 1):
        for subset in range(1 << (n - 1)):
            masks = list(smaller.masks) + [subset]
            for u in iter_bits(subset):
                masks[u] |= 1 << (n - 1)
            g = Graph.from_masks(masks)
            key = canonical_key(g)
            if key not in seen:
                seen.add(key)
                found.append(g)
    return tuple(found)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every graph on n vertices up to isomorphism, in a fixed order"""
    if n > ENUMERATION_LIMIT:
        raise SizeLimitError('enumeration vertex count', n, ENUMERATION_LIMIT)
    if n < 0:
        raise SizeLimitError('enumeration vertex count', n, 0)
    yield from _classes(n)


def enumerate_upto(max_n: int) -> Iterator[Graph]:
    """Graphs on 1..max_n vertices"""
    for n in range(1, max_n + 1):
        yield from enumerate_graphs(n)

"""
Bitset helpers. A vertex set is an int with bit v set iff v is a member;
every search in the project runs on these masks.
"""

from typing import Iterable, Iterator, List, Sequence

from utils.base._types import Mask


def bit(v: int) -> Mask:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> Mask:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: Mask) -> Iterator[int]:
    """Members of `mask` in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: Mask) -> List[int]:
    return list(iter_bits(mask))


def lowest(mask: Mask) -> int:
    return (mask & -mask).bit_length() - 1


def size(mask: Mask) -> int:
    return bin(mask).count('1')


def neighborhood(adj: Sequence[Mask], mask: Mask) -> Mask:
    """Union of the neighborhoods of the members of `mask`"""
    out = 0
    for v in iter_bits(mask):
        out |= adj[v]
    return out


def reach(adj: Sequence[Mask], start: Mask, within: Mask) -> Mask:
    """Vertices of `within` reachable from `start` inside `within`"""
    seen = start & within
    frontier = seen
    while frontier:
        grow = neighborhood(adj, frontier) & within & ~seen
        seen |= grow
        frontier = grow
    return seen


def mask_components(adj: Sequence[Mask], within: Mask) -> List[Mask]:
    """Connected components of the subgraph induced by `within`,
    ordered by smallest member"""
    parts = []
    rest = within
    while rest:
        comp = reach(adj, rest & -rest, within)
        parts.append(comp)
        rest &= ~comp
    return parts


def is_connected_mask(adj: Sequence[Mask], within: Mask) -> bool:
    if not within:
        return False
    return reach(adj, within & -within, within) == within

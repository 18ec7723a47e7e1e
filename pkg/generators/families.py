"""
Named graph families with fixed labelings:

cycle                0..n-1 in order
path                 0..n-1 in order
complete             K_n
complete_bipartite   parts 0..n-1 and n..n+m-1
petersen             outer cycle 0..4, spokes i-(i+5), inner pentagram 5+i-5+(i+2)%5
hourglass            center 0, triangles 0-1-2 and 0-3-4
k23                  parts {0, 1} and {2, 3, 4}
c5plus               cycle 0..4 plus the chord 0-2
wheel                rim 0..n-1, center n
prism                triangles 0-1-2 and 3-4-5, rungs i-(i+3)
wagner               cycle 0..7 plus the long diagonals i-(i+4)
g7                   six-cycle 0..5 plus vertex 6 joined to 0 and 3
"""

from typing import Optional, Union

from graphs.models import Graph

from .models import FamilySpec


def _cycle_edges(n, start=0):
    return [(start + i, start + (i + 1) % n) for i in range(n)]


def _cycle(spec):
    return Graph.from_edges(spec.n, _cycle_edges(spec.n))


def _path(spec):
    return Graph.from_edges(spec.n, [(i, i + 1) for i in range(spec.n - 1)])


def _complete(spec):
    return Graph.from_edges(spec.n, [(u, v) for v in range(spec.n) for u in range(v)])


def _complete_bipartite(spec):
    n, m = spec.n, spec.m
    return Graph.from_edges(n + m, [(u, v) for u in range(n) for v in range(n, n + m)])


def _petersen(spec):
    edges = _cycle_edges(5)
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def _hourglass(spec):
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def _k23(spec):
    return Graph.from_edges(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])


def _c5plus(spec):
    return Graph.from_edges(5, _cycle_edges(5) + [(0, 2)])


def _wheel(spec):
    n = spec.n
    return Graph.from_edges(n + 1, _cycle_edges(n) + [(i, n) for i in range(n)])


def _prism(spec):
    edges = _cycle_edges(3) + _cycle_edges(3, 3) + [(i, i + 3) for i in range(3)]
    return Graph.from_edges(6, edges)


def _wagner(spec):
    return Graph.from_edges(8, _cycle_edges(8) + [(i, i + 4) for i in range(4)])


def _g7(spec):
    return Graph.from_edges(7, _cycle_edges(6) + [(0, 6), (3, 6)])


BUILDERS = {
    'cycle': _cycle,
    'path': _path,
    'complete': _complete,
    'complete_bipartite': _complete_bipartite,
    'petersen': _petersen,
    'hourglass': _hourglass,
    'k23': _k23,
    'c5plus': _c5plus,
    'wheel': _wheel,
    'prism': _prism,
    'wagner': _wagner,
    'g7': _g7,
}


def family(spec: Union[FamilySpec, str], n: Optional[int] = None,
           m: Optional[int] = None) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec(spec, n, m)
    return BUILDERS[spec.name](spec)

from dataclasses import dataclass
from typing import Optional, Tuple

from graphs.models import Graph
from kempe.models import ColoredInstance

UNSAT_CERTIFIED = 'UNSAT_CERTIFIED'
INCONCLUSIVE = 'INCONCLUSIVE'


@dataclass(frozen=True)
class ZInstance:
    """
    Doubled graph of `base` with its canonical coloring. Vertex (x, i)
    of the doubled graph has index 2x + (i - 1), so the transversal
    (copy 1) sits on the even indices.
    """
    base: Graph
    inst: ColoredInstance

    @staticmethod
    def vertex(x: int, i: int) -> int:
        return 2 * x + (i - 1)

    @staticmethod
    def label(v: int) -> Tuple[int, int]:
        return v // 2, v % 2 + 1

    @property
    def size(self) -> int:
        return self.inst.graph.n


@dataclass(frozen=True)
class GoodPermutation:
    """f[x] is the image of base vertex x"""
    f: Tuple[int, ...]


@dataclass(frozen=True)
class AnticliqueBound:
    """
    Lower bound on the total bag size when the singleton bags are
    exactly `members`: one vertex for each member, at least three for
    each of their H-neighbors, at least two for the rest
    """
    members: Tuple[int, ...]
    neighborhood: Tuple[int, ...]
    size_one: int
    size_two: int
    size_three: int
    bound: int
    expanding: bool


@dataclass(frozen=True)
class CountingReport:
    applicable: bool
    good_perm_exists: bool
    good_permutation: Optional[GoodPermutation]
    violating_anticlique: Optional[Tuple[int, ...]]
    verdict: str
    vertex_count: int
    min_bound: Optional[int]
    bounds: Tuple[AnticliqueBound, ...]
    regular_premises: bool

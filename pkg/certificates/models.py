from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from django.conf import settings

from graphs.models import Graph
from kempe.chains import h_graph
from kempe.models import ColoredInstance, HGraph
from utils.base._types import Edge
from utils.base.exceptions import BudgetError, PatternError

SAT = 'SAT'
UNSAT = 'UNSAT'
BUDGET_EXCEEDED = 'BUDGET_EXCEEDED'

EXHAUSTIVE = 'EXHAUSTIVE'
COUNTING = 'COUNTING'


@dataclass(frozen=True)
class TargetPattern:
    """
    Pattern K over class indices 0..k-1. Class i stands for the
    representative of class i; classes without pattern edges are
    isolated pattern vertices.
    """
    k: int
    edges: Tuple[Edge, ...]

    @classmethod
    def build(cls, k: int, edges: Iterable[Sequence[int]]) -> 'TargetPattern':
        normal = set()
        for u, v in edges:
            if not (0 <= u < k and 0 <= v < k):
                raise PatternError(f"pattern edge {u}-{v} is out of range for {k} classes")
            if u == v:
                raise PatternError(f"pattern loop at {u}")
            normal.add((min(u, v), max(u, v)))
        return cls(k, tuple(sorted(normal)))

    @classmethod
    def from_graph(cls, g: Graph) -> 'TargetPattern':
        return cls(g.n, g.edges)

    @classmethod
    def full(cls, h: HGraph) -> 'TargetPattern':
        return cls.from_graph(h.graph)

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(self.k, self.edges)

    def check_fits(self, inst: ColoredInstance, h: Optional[HGraph] = None) -> None:
        """Raise unless this pattern is a spanning subgraph of H of `inst`"""
        if self.k != inst.k:
            raise PatternError(f"pattern has {self.k} vertices, instance has {inst.k} classes")
        if h is None:
            h = h_graph(inst)
        for s, t in self.edges:
            if not h.graph.has_edge(s, t):
                raise PatternError(f"classes {s} and {t} share no Kempe chain")


@dataclass(frozen=True)
class RootedCertificate:
    """Bag of every transversal vertex, keyed by that vertex"""
    bags: Mapping[int, FrozenSet[int]]

    @classmethod
    def from_class_bags(cls, inst: ColoredInstance,
                        bags: Sequence[Iterable[int]]) -> 'RootedCertificate':
        return cls({inst.reps[i]: frozenset(bag) for i, bag in enumerate(bags)})

    def class_bags(self, inst: ColoredInstance) -> Tuple[FrozenSet[int], ...]:
        return tuple(self.bags.get(r, frozenset()) for r in inst.reps)

    def sizes(self) -> Dict[int, int]:
        return {t: len(bag) for t, bag in self.bags.items()}

    def to_dict(self) -> dict:
        return {'bags': {str(t): sorted(bag) for t, bag in sorted(self.bags.items())}}


@dataclass(frozen=True)
class Violation:
    """
    One failed certificate condition. `kind` is one of missing-bag,
    unknown-root, out-of-range, empty, root-missing, overlap,
    disconnected, uncovered, pattern
    """
    kind: str
    detail: str
    witness: Tuple = ()


@dataclass(frozen=True)
class Budget:
    nodes: int
    seconds: float

    def __post_init__(self):
        if isinstance(self.nodes, bool) or not isinstance(self.nodes, int) or self.nodes <= 0:
            raise BudgetError(f"node budget must be a positive integer, got {self.nodes!r}")
        if isinstance(self.seconds, bool) or not isinstance(self.seconds, (int, float)) \
                or not self.seconds > 0:
            raise BudgetError(f"time budget must be positive, got {self.seconds!r}")

    @classmethod
    def default(cls) -> 'Budget':
        return cls(settings.KEMPE_BUDGET_NODES, float(settings.KEMPE_BUDGET_SECS))

    @classmethod
    def from_options(cls, nodes=None, seconds=None) -> 'Budget':
        base = cls.default()
        return cls(base.nodes if nodes is None else nodes,
                   base.seconds if seconds is None else seconds)


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    elapsed: float = 0.0
    pruned: Mapping[str, int] = field(default_factory=dict)

    def merge(self, other: 'SearchStats') -> 'SearchStats':
        pruned = dict(self.pruned)
        for rule, count in other.pruned.items():
            pruned[rule] = pruned.get(rule, 0) + count
        return SearchStats(self.nodes + other.nodes,
                           max(self.max_depth, other.max_depth),
                           max(self.elapsed, other.elapsed), pruned)


@dataclass(frozen=True)
class SolveVerdict:
    status: str
    certificate: Optional[RootedCertificate] = None
    stats: SearchStats = field(default_factory=SearchStats)
    unsat_kind: Optional[str] = None

    @property
    def sat(self) -> bool:
        return self.status == SAT

"""
Colorings, transversals and the instances built from them.

An instance is validated completely when it is constructed; every other
module may assume a proper coloring and a valid transversal.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Sequence, Tuple

from graphs.bits import mask_of
from graphs.models import Graph
from utils.base._types import Mask
from utils.base.constants import MAX_CLASSES
from utils.base.crypto import hash_digest
from utils.base.exceptions import InstanceError, SizeLimitError


@dataclass(frozen=True)
class Coloring:
    """Partition of the vertices into anticliques, indexed by class"""
    classes: Tuple[FrozenSet[int], ...]
    class_of: Tuple[int, ...]

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Sequence[int]]) -> 'Coloring':
        owner = [-1] * n
        frozen = []
        for index, members in enumerate(classes):
            members = list(members)
            if not members:
                raise InstanceError('color class is empty', 'classes', index)
            if len(set(members)) != len(members):
                raise InstanceError('color class repeats a vertex', 'classes', index)
            for v in members:
                if not 0 <= v < n:
                    raise InstanceError(
                        f"vertex {v} is out of range for {n} vertices", 'classes', index)
                if owner[v] != -1:
                    raise InstanceError(
                        f"vertex {v} is already in class {owner[v]}", 'classes', index)
                owner[v] = index
            frozen.append(frozenset(members))
        missing = [v for v in range(n) if owner[v] == -1]
        if missing:
            raise InstanceError(f"vertices {missing} are in no color class", 'classes')
        return cls(tuple(frozen), tuple(owner))

    @property
    def k(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class Transversal:
    """One representative per class, `reps[i]` for class i"""
    reps: Tuple[int, ...]


@dataclass(frozen=True)
class ColoredInstance:
    graph: Graph
    coloring: Coloring
    transversal: Transversal
    class_masks: Tuple[Mask, ...] = field(
        init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        g, coloring, reps = self.graph, self.coloring, self.transversal.reps

        if coloring.k > MAX_CLASSES:
            raise SizeLimitError('class count', coloring.k, MAX_CLASSES)
        if len(coloring.class_of) != g.n:
            raise InstanceError(
                f"coloring covers {len(coloring.class_of)} vertices, graph has {g.n}",
                'classes')

        masks = tuple(mask_of(members) for members in coloring.classes)
        for index, mask in enumerate(masks):
            for v in coloring.classes[index]:
                if coloring.class_of[v] != index:
                    raise InstanceError(
                        f"class index of vertex {v} disagrees", 'classes', index)
                if g.masks[v] & mask:
                    raise InstanceError(
                        'color class is not an anticlique', 'classes', index)

        if len(reps) != coloring.k:
            raise InstanceError(
                f"transversal has {len(reps)} vertices for {coloring.k} classes",
                'transversal')
        for index, r in enumerate(reps):
            if not 0 <= r < g.n or coloring.class_of[r] != index:
                raise InstanceError(
                    f"vertex {r} is not in class {index}", 'transversal', index)

        object.__setattr__(self, 'class_masks', masks)

    @classmethod
    def build(cls, graph: Graph, classes: Sequence[Sequence[int]],
              reps: Sequence[int]) -> 'ColoredInstance':
        return cls(graph, Coloring.from_classes(graph.n, classes), Transversal(tuple(reps)))

    @classmethod
    def singletons(cls, graph: Graph) -> 'ColoredInstance':
        """Every vertex its own class and its own representative"""
        return cls.build(graph, [[v] for v in range(graph.n)], range(graph.n))

    @property
    def k(self) -> int:
        return self.coloring.k

    @property
    def reps(self) -> Tuple[int, ...]:
        return self.transversal.reps

    @property
    def rep_mask(self) -> Mask:
        return mask_of(self.reps)

    @property
    def class_lists(self) -> List[List[int]]:
        return [sorted(members) for members in self.coloring.classes]

    def class_of(self, v: int) -> int:
        return self.coloring.class_of[v]

    def rep_of(self, v: int) -> int:
        """Representative of the class of `v`"""
        return self.reps[self.coloring.class_of[v]]

    def to_dict(self) -> dict:
        return {
            'graph': self.graph.to_dict(),
            'classes': self.class_lists,
            'transversal': list(self.reps),
        }

    def digest(self) -> str:
        return hash_digest(self.to_dict())


@dataclass(frozen=True)
class KempeChain:
    """A connected component of the subgraph induced by two classes"""
    class_a: int
    class_b: int
    vertices: FrozenSet[int]

    @property
    def trivial(self) -> bool:
        return len(self.vertices) == 1


@dataclass(frozen=True)
class HGraph:
    """
    Graph on class indices; i and j are adjacent iff their
    representatives lie in a common Kempe chain
    """
    graph: Graph
    reps: Tuple[int, ...]

    @property
    def k(self) -> int:
        return self.graph.n

    @property
    def edges(self):
        return self.graph.edges

    def is_complete(self) -> bool:
        return self.graph.edge_count == self.k * (self.k - 1) // 2


@dataclass(frozen=True)
class AddTransversalEdge:
    i: int
    j: int


@dataclass(frozen=True)
class DisjointClique:
    m: int

from dataclasses import dataclass
from typing import Optional

from graphs.models import Graph
from kempe.models import ColoredInstance
from utils.base.constants import FAMILY_NAMES, MAX_CLASSES
from utils.base.exceptions import FamilyError

# Families whose size is given by --n, with their smallest allowed n
SIZED_FAMILIES = {'cycle': 3, 'path': 1, 'complete': 1, 'complete_bipartite': 1, 'wheel': 3}


@dataclass(frozen=True)
class FamilySpec:
    """
    A named family member. `n` sizes cycle, path, complete and wheel
    (rim length); complete_bipartite uses `n` and `m` as its part sizes.
    The remaining families are fixed graphs and take no sizes.
    """
    name: str
    n: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise FamilyError(
                f"unknown family {self.name!r}, choose from {', '.join(FAMILY_NAMES)}")
        if self.name in SIZED_FAMILIES:
            low = SIZED_FAMILIES[self.name]
            if self.n is None or self.n < low:
                raise FamilyError(f"family {self.name} needs n >= {low}")
            if self.name == 'complete_bipartite':
                if self.m is None or self.m < 1:
                    raise FamilyError('family complete_bipartite needs m >= 1')
            elif self.m is not None:
                raise FamilyError(f"family {self.name} takes no m")
        elif self.n is not None or self.m is not None:
            raise FamilyError(f"family {self.name} is a fixed graph and takes no sizes")


@dataclass(frozen=True)
class PathSystemSpec:
    """
    Sampler settings: each pattern edge becomes a fresh two-colored path
    with an even number of internal vertices, at most `max_internal`
    """
    pattern: Graph
    seed: int = 0
    max_internal: int = 2
    extra_edge_prob: float = 0.0
    kempe_complete: bool = False

    def __post_init__(self):
        if not 1 <= self.pattern.n <= MAX_CLASSES:
            raise FamilyError(f"pattern needs 1 to {MAX_CLASSES} vertices, has {self.pattern.n}")
        if self.max_internal < 0 or self.max_internal % 2:
            raise FamilyError(
                f"max_internal must be even and non-negative, got {self.max_internal}")
        if not 0.0 <= self.extra_edge_prob <= 1.0:
            raise FamilyError(
                f"extra_edge_prob must be in [0, 1], got {self.extra_edge_prob}")


@dataclass(frozen=True)
class PathSystem:
    instance: ColoredInstance
    spec: PathSystemSpec
    extra_edges: int
    rejected_edges: int

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from certificates.models import RootedCertificate, TargetPattern
from utils.base._types import Edge

# Rungs of the doubled-graph ladder, in the order they are tried
SPANNING_FIVE_CYCLE = 'spanning-5-cycle'
SECTION_THREE = 'section-3'
CUT_VERTEX = 'cutvertex'
MATCHABLE_ANTICLIQUE = 'matchable-anticlique'
SPANNING_SIX_CYCLE = 'spanning-6-cycle'
GOOD_MATCHING = 'good-matching'
WHEEL = 'wheel'
SPORADIC = 'sporadic'
GOOD_PERMUTATION = 'good-permutation'
SOLVER = 'solver'

RUNGS = (
    SPANNING_FIVE_CYCLE, SECTION_THREE, CUT_VERTEX, MATCHABLE_ANTICLIQUE,
    SPANNING_SIX_CYCLE, GOOD_MATCHING, WHEEL, SPORADIC, GOOD_PERMUTATION, SOLVER,
)


@dataclass(frozen=True)
class MatchingWitness:
    """
    Anticlique `anticlique` of the pattern together with a matching
    from every other pattern vertex into it. Each pair is (s, t) with
    s outside the anticlique and t inside.
    """
    pattern: TargetPattern
    anticlique: FrozenSet[int]
    matching: Tuple[Edge, ...]

    @property
    def partner(self) -> Dict[int, int]:
        return dict(self.matching)


@dataclass(frozen=True)
class GoodMatching:
    edges: Tuple[Edge, ...]


@dataclass(frozen=True)
class StrategyReport:
    """
    Certificate of a doubled graph and the rung that produced it.
    `attempts` lists the rungs that did not apply, `steps` the rungs
    used on the smaller graphs a reduction rung recursed into.
    """
    rung: str
    certificate: RootedCertificate
    attempts: Tuple[str, ...] = ()
    steps: Tuple[str, ...] = ()

    @property
    def path(self) -> str:
        return ' > '.join((self.rung,) + self.steps)

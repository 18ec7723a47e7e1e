from dataclasses import dataclass
from typing import FrozenSet, Mapping, Optional

K5 = 'K5'
K33 = 'K3,3'


@dataclass(frozen=True)
class MinorEmbedding:
    """Bag of every pattern vertex; unlike a certificate there are no roots"""
    bags: Mapping[int, FrozenSet[int]]

    def to_dict(self) -> dict:
        return {'bags': {str(v): sorted(bag) for v, bag in sorted(self.bags.items())}}


@dataclass(frozen=True)
class RemarkReport:
    """
    Five-class instance checked against the conclusions drawn from a
    complete H: not planar and a K5 minor. `consistent` is False only
    when the premises hold and a conclusion fails.
    """
    premises_ok: bool
    planar: bool
    has_k5_minor: bool
    k5_embedding: Optional[MinorEmbedding]
    nonplanarity_pattern: Optional[str]
    nonplanarity_embedding: Optional[MinorEmbedding]
    consistent: bool

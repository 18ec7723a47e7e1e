from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Tuple

from django.conf import settings

from certificates.models import Budget
from constructive.models import SOLVER
from utils.base.errors import ExitStatus, RCode

JSON = 'json'
DOT = 'dot'
TEXT = 'text'

OUTPUT_FORMATS = (JSON, DOT, TEXT)


@dataclass(frozen=True)
class RunConfig:
    """
    Validated options of one command run. `inputs` maps each input flag
    to the file it was given, e.g. ``{'--in': 'inst.json'}``.
    """
    command: str
    inputs: Mapping[str, str] = field(default_factory=dict)
    seed: int = 0
    nodes: Optional[int] = None
    seconds: Optional[float] = None
    threads: Optional[int] = None
    output: str = JSON
    verbosity: int = 1

    @property
    def budget(self) -> Budget:
        return Budget.from_options(self.nodes, self.seconds)

    @property
    def workers(self) -> int:
        return self.threads or settings.KEMPE_THREADS


@dataclass(frozen=True)
class CommandReport:
    """
    What a command hands back for rendering. `text` replaces the generic
    text rendering and `dot` is only set by commands with a figure.
    """
    data: Any
    status: RCode = ExitStatus.COMPLETED
    summary: str = ''
    digest: str = ''
    text: Optional[str] = None
    dot: Optional[str] = None


@dataclass(frozen=True)
class FuzzFailure:
    seed: int
    status: str
    detail: str
    replay: str


@dataclass(frozen=True)
class FuzzReport:
    pattern: str
    seed: int
    trials: int
    max_internal: int
    extra_edge_prob: float
    kempe_complete: bool
    passed: int
    budget_exceeded: int
    failures: Tuple[FuzzFailure, ...]


@dataclass(frozen=True)
class SweepRow:
    graph6: str
    n: int
    m: int
    rung: str
    path: str
    verified: bool


@dataclass(frozen=True)
class SweepReport:
    max_n: int
    rows: Tuple[SweepRow, ...]

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def verified(self) -> int:
        return sum(row.verified for row in self.rows)

    @property
    def solver_fallbacks(self) -> int:
        return sum(SOLVER in row.path.split(' > ') for row in self.rows)


@dataclass(frozen=True)
class RemarkFailure:
    seed: int
    planar: bool
    has_k5_minor: bool
    replay: str


@dataclass(frozen=True)
class RemarkAggregate:
    """Counts over `trials` sampled five-class instances"""
    pattern: str
    seed: int
    trials: int
    premises_ok: int
    nonplanar: int
    k5_minors: int
    consistent: int
    budget_exceeded: int
    failures: Tuple[RemarkFailure, ...]

"""
Exact bag-growth search shared by the rooted solver and the minor search.

Every bag starts at its root and grows one adjacent vertex at a time.
The search branches on the undecided vertex that can join the bags of
the most unsatisfied pattern edges: it either joins one of those bags
or is excluded from all of them. Any model that extends a state is
reachable through exactly these branches, so an exhausted search proves
that no model exists.

Rules, each of which can be switched off:

reachability  an unsatisfied edge whose two bags cannot meet even after
              growing through every vertex still open to them fails
capacity      pairwise disjoint unsatisfied edges each need a distinct
              new vertex from their growth regions, so a bag that must
              grow toward a pattern neighbor and cannot fails at once
freeze        a bag whose pattern edges are all satisfied stops growing
"""

import time
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from graphs.bits import bit, iter_bits, neighborhood, reach, size
from utils.base._types import Mask
from utils.base.constants import CLOCK_CHECK_INTERVAL, PRUNING_RULES

SAT = 'sat'
FAIL = 'fail'
BRANCH = 'branch'


class BudgetExhausted(Exception):
    """Node or time budget ran out"""


# Shared by the worker processes of one parallel solve; once set, every
# running subtree stops at its next clock check
_stop_event = None


def init_worker(stop_event) -> None:
    global _stop_event
    _stop_event = stop_event


def stop_requested() -> bool:
    return _stop_event is not None and _stop_event.is_set()


@dataclass(frozen=True)
class SearchProblem:
    adj: Tuple[Mask, ...]
    roots: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    allowed: Tuple[Mask, ...]
    rules: FrozenSet[str] = frozenset(PRUNING_RULES)

    @property
    def k(self) -> int:
        return len(self.roots)


@dataclass(frozen=True)
class SearchState:
    bags: Tuple[Mask, ...]
    blocked: Tuple[Mask, ...]
    free: Mask
    depth: int = 0


class BagSearch:

    def __init__(self, problem: SearchProblem, node_limit: int, seconds: float):
        self.problem = problem
        self.node_limit = node_limit
        self.seconds = seconds
        self.started = time.monotonic()
        self.nodes = 0
        self.max_depth = 0
        self.pruned: Dict[str, int] = {}

    def initial_state(self) -> SearchState:
        p = self.problem
        used = 0
        for r in p.roots:
            used |= bit(r)
        everything = (1 << len(p.adj)) - 1
        return SearchState(
            tuple(bit(r) for r in p.roots), (0,) * p.k, everything & ~used)

    # -- bookkeeping ---------------------------------------------------

    def _tick(self, state: SearchState) -> None:
        self.nodes += 1
        if state.depth > self.max_depth:
            self.max_depth = state.depth
        if self.nodes > self.node_limit:
            raise BudgetExhausted(f"node budget of {self.node_limit} exhausted")
        if self.nodes % CLOCK_CHECK_INTERVAL == 0 and self.elapsed() > self.seconds:
            raise BudgetExhausted(f"time budget of {self.seconds}s exhausted")
        if self.nodes % CLOCK_CHECK_INTERVAL == 0 and stop_requested():
            raise BudgetExhausted('search stopped by the parallel solver')

    def _prune(self, rule: str) -> Tuple[str, str]:
        self.pruned[rule] = self.pruned.get(rule, 0) + 1
        return FAIL, rule

    def elapsed(self) -> float:
        return time.monotonic() - self.started

    # -- one node ------------------------------------------------------

    def expand(self, state: SearchState):
        """
        Classify `state`: (SAT, bags), (FAIL, reason) or
        (BRANCH, children in search order)
        """
        p = self.problem
        adj, bags = p.adj, state.bags
        nbr = [neighborhood(adj, b) for b in bags]

        open_edges = [(s, t) for s, t in p.edges if not nbr[s] & bags[t]]
        if not open_edges:
            return SAT, bags

        if 'freeze' in p.rules:
            growing = sorted({i for e in open_edges for i in e})
        else:
            growing = list(range(p.k))
        avail = {i: state.free & p.allowed[i] & ~state.blocked[i] for i in growing}
        eligible = {i: nbr[i] & avail[i] for i in growing}

        if 'reachability' in p.rules or 'capacity' in p.rules:
            region = {}
            for i in {i for e in open_edges for i in e}:
                region[i] = reach(adj, eligible[i], avail[i])

            if 'reachability' in p.rules:
                for s, t in open_edges:
                    full_s = bags[s] | region[s]
                    if not neighborhood(adj, full_s) & (bags[t] | region[t]):
                        return self._prune('reachability')

            if 'capacity' in p.rules:
                used_bags = set()
                supply = 0
                need = 0
                for s, t in open_edges:
                    if s in used_bags or t in used_bags:
                        continue
                    used_bags.update((s, t))
                    supply |= region[s] | region[t]
                    need += 1
                if need > size(supply):
                    return self._prune('capacity')

        score: Dict[int, int] = {}
        for s, t in open_edges:
            for v in iter_bits(eligible[s] | eligible[t]):
                score[v] = score.get(v, 0) + 1
        if not score:
            return FAIL, 'stuck'
        top = max(score.values())
        v = min(u for u, c in score.items() if c == top)

        targets = [i for i in growing if eligible[i] >> v & 1]
        depth = state.depth + 1
        children = []
        rest = state.free & ~bit(v)
        for i in targets:
            grown = bags[:i] + (bags[i] | bit(v),) + bags[i + 1:]
            children.append(SearchState(grown, state.blocked, rest, depth))
        blocked = list(state.blocked)
        for i in targets:
            blocked[i] |= bit(v)
        children.append(SearchState(bags, tuple(blocked), state.free, depth))
        return BRANCH, children

    # -- drivers -------------------------------------------------------

    def run(self, state: Optional[SearchState] = None) -> Optional[Tuple[Mask, ...]]:
        """Depth-first search below `state`; the first model found or None"""
        stack = [state or self.initial_state()]
        while stack:
            current = stack.pop()
            self._tick(current)
            kind, payload = self.expand(current)
            if kind == SAT:
                return payload
            if kind == BRANCH:
                stack.extend(reversed(payload))
        return None

    def split(self, state: SearchState, count: int) -> List[Tuple[str, object]]:
        """
        Expand level by level until at least `count` open states exist.
        Returns (SAT, bags) and (BRANCH, state) entries in depth-first order.
        """
        frontier: List[Tuple[str, object]] = [(BRANCH, state)]
        while True:
            open_states = sum(1 for kind, _ in frontier if kind == BRANCH)
            if open_states == 0 or len(frontier) >= count:
                return frontier
            grown = []
            progressed = False
            for kind, item in frontier:
                if kind != BRANCH:
                    grown.append((kind, item))
                    continue
                self._tick(item)
                result, payload = self.expand(item)
                if result == SAT:
                    grown.append((SAT, payload))
                elif result == BRANCH:
                    progressed = True
                    grown.extend((BRANCH, child) for child in payload)
            frontier = grown
            if not progressed:
                return frontier


def explore(problem: SearchProblem, state: SearchState, node_limit: int,
            seconds: float) -> Tuple[str, Optional[Tuple[Mask, ...]], dict]:
    """Search one subtree; entry point of worker processes"""
    engine = BagSearch(problem, node_limit, seconds)
    try:
        if stop_requested():
            raise BudgetExhausted('search stopped by the parallel solver')
        found = engine.run(state)
        status = SAT if found is not None else FAIL
    except BudgetExhausted:
        found, status = None, 'budget'
    return status, found, {
        'nodes': engine.nodes, 'max_depth': engine.max_depth,
        'elapsed': engine.elapsed(), 'pruned': dict(engine.pruned)}


def bag_lists(bags: Sequence[Mask]) -> List[List[int]]:
    return [list(iter_bits(b)) for b in bags]

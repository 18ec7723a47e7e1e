"""
Matchable anticliques and good matchings of the pattern.

An anticlique A of the pattern is matchable when every other pattern
vertex s can be matched to its own t in A such that G[P ∪ Q] - t stays
connected, P and Q being the classes of s and t. The bags are then {t}
for t in A and (P ∪ Q) - {t} for a matched s.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from certificates.models import RootedCertificate, TargetPattern
from graphs.bits import bit, is_connected_mask, iter_bits, size
from graphs.models import Graph
from kempe.models import ColoredInstance
from utils.base._types import Edge
from utils.base.exceptions import PatternError, WitnessError
from utils.base.logger import logger
from zmodel.counting import independent_sets

from .models import GoodMatching, MatchingWitness


def pair_condition(inst: ColoredInstance, s: int, t: int) -> bool:
    """Whether G[P ∪ Q] minus the representative of t is connected"""
    within = inst.class_masks[s] | inst.class_masks[t]
    return is_connected_mask(inst.graph.masks, within & ~bit(inst.reps[t]))


def _match_into(rest: Sequence[int], candidates: Dict[int, List[int]]) -> Optional[Dict[int, int]]:
    """Augmenting-path matching saturating `rest`, or None"""
    owner: Dict[int, int] = {}

    def augment(s: int, seen: set) -> bool:
        for t in candidates[s]:
            if t in seen:
                continue
            seen.add(t)
            if t not in owner or augment(owner[t], seen):
                owner[t] = s
                return True
        return False

    for s in rest:
        if not augment(s, set()):
            return None
    return {s: t for t, s in owner.items()}


def find_matchable_anticlique(inst: ColoredInstance,
                              pat: TargetPattern) -> Optional[MatchingWitness]:
    """
    Try the anticliques of the pattern from the largest down, ties in
    lexicographic order, and return the first one with a matching
    """
    pat.check_fits(inst)
    g = pat.graph
    if g.n == 0:
        return MatchingWitness(pat, frozenset(), ())

    usable = {}
    for s, t in pat.edges:
        for a, b in ((s, t), (t, s)):
            usable[(a, b)] = pair_condition(inst, a, b)

    order = sorted(independent_sets(g), key=lambda m: (-size(m), list(iter_bits(m))))
    for members in order:
        rest = [v for v in range(g.n) if not members >> v & 1]
        if len(rest) > size(members):
            continue
        candidates = {
            s: [t for t in g.neighbors(s) if members >> t & 1 and usable[(s, t)]]
            for s in rest}
        matched = _match_into(rest, candidates)
        if matched is None:
            continue
        witness = MatchingWitness(
            pat, frozenset(iter_bits(members)), tuple(sorted(matched.items())))
        logger.debug(
            f"matchable anticlique {sorted(witness.anticlique)} "
            f"with matching {list(witness.matching)}")
        return witness
    return None


def _check_witness(inst: ColoredInstance, w: MatchingWitness) -> None:
    pat = w.pattern
    if pat.k != inst.k:
        raise WitnessError(f"pattern has {pat.k} vertices, instance has {inst.k} classes")
    pat.check_fits(inst)
    outside = [v for v in w.anticlique if not 0 <= v < pat.k]
    if outside:
        raise WitnessError(f"anticlique vertices {sorted(outside)} are not pattern vertices")
    for u, v in pat.edges:
        if u in w.anticlique and v in w.anticlique:
            raise WitnessError(f"anticlique holds the pattern edge {u}-{v}", pair=(u, v))

    sources, targets = set(), set()
    for s, t in w.matching:
        if s in w.anticlique or t not in w.anticlique:
            raise WitnessError(
                f"pair ({s}, {t}) does not run from outside the anticlique into it",
                pair=(s, t))
        if (min(s, t), max(s, t)) not in pat.edges:
            raise WitnessError(f"pair ({s}, {t}) is not a pattern edge", pair=(s, t))
        if s in sources or t in targets:
            raise WitnessError(f"pair ({s}, {t}) shares an end with another pair", pair=(s, t))
        sources.add(s)
        targets.add(t)
        if not pair_condition(inst, s, t):
            raise WitnessError(
                f"removing the representative of {t} disconnects classes {s} and {t}",
                pair=(s, t))

    uncovered = [v for v in range(pat.k) if v not in w.anticlique and v not in sources]
    if uncovered:
        raise WitnessError(f"pattern vertices {uncovered} are not matched")


def certificate_from_matching(inst: ColoredInstance, w: MatchingWitness) -> RootedCertificate:
    _check_witness(inst, w)
    bags = [{r} for r in inst.reps]
    for s, t in w.matching:
        bags[s] = set(inst.coloring.classes[s] | inst.coloring.classes[t])
        bags[s].discard(inst.reps[t])
    return RootedCertificate.from_class_bags(inst, bags)


def perfect_matchings(g: Graph) -> List[Tuple[Edge, ...]]:
    """Every perfect matching, each as a sorted edge tuple"""
    found = []

    def extend(unmatched: Tuple[int, ...], chosen: List[Edge]) -> None:
        if not unmatched:
            found.append(tuple(chosen))
            return
        u, others = unmatched[0], unmatched[1:]
        for v in others:
            if g.has_edge(u, v):
                extend(tuple(x for x in others if x != v), chosen + [(u, v)])

    extend(tuple(range(g.n)), [])
    return found


def is_good_matching(g: Graph, matching: Sequence[Edge]) -> bool:
    """
    Every other edge uv lies on a triangle through a matching edge, or
    on a four-cycle through the matching edges at u and at v
    """
    mate = {}
    for u, v in matching:
        mate[u], mate[v] = v, u
    chosen = {(min(e), max(e)) for e in matching}
    for u, v in g.edges:
        if (u, v) in chosen:
            continue
        if not (g.has_edge(mate[u], v) or g.has_edge(mate[v], u)
                or g.has_edge(mate[u], mate[v])):
            return False
    return True


def _spread(matching: Sequence[Edge], n: int) -> int:
    return sum(min(abs(u - v), n - abs(u - v)) for u, v in matching)


def find_good_matching(pat: TargetPattern) -> Optional[GoodMatching]:
    """
    First good perfect matching of a six-vertex pattern, preferring
    edges that join far-apart labels
    """
    if pat.k != 6:
        raise PatternError(f"good matchings need six pattern vertices, got {pat.k}")
    g = pat.graph
    ranked = sorted(perfect_matchings(g), key=lambda m: (-_spread(m, g.n), m))
    for matching in ranked:
        if is_good_matching(g, matching):
            return GoodMatching(matching)
    return None

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from django.conf import settings

from graphs.bits import iter_bits
from kempe.models import ColoredInstance
from utils.base.constants import PRUNING_RULES
from utils.base.exceptions import BudgetError, SolverError
from utils.base.logger import logger

from .models import (BUDGET_EXCEEDED, EXHAUSTIVE, SAT, UNSAT, Budget,
                     RootedCertificate, SearchStats, SolveVerdict,
                     TargetPattern)
from .search import (FAIL, BagSearch, BudgetExhausted, SearchProblem,
                     explore, init_worker)
from .search import SAT as FOUND
from .verifier import verify

# Open subtrees handed to each worker when searching in parallel
SUBTREES_PER_WORKER = 4


def check_rules(rules: Iterable[str]) -> frozenset:
    rules = frozenset(rules)
    unknown = rules - set(PRUNING_RULES)
    if unknown:
        raise BudgetError(f"unknown pruning rules {sorted(unknown)}")
    return rules


def rooted_problem(inst: ColoredInstance, pat: TargetPattern,
                   rules: Iterable[str] = PRUNING_RULES) -> SearchProblem:
    free = inst.graph.vertex_mask & ~inst.rep_mask
    return SearchProblem(
        adj=inst.graph.masks, roots=inst.reps, edges=pat.edges,
        allowed=(free,) * inst.k, rules=check_rules(rules))


def solve(inst: ColoredInstance, pat: TargetPattern, budget: Optional[Budget] = None,
          rules: Iterable[str] = PRUNING_RULES, workers: Optional[int] = None) -> SolveVerdict:
    """
    Decide whether `inst` has a rooted certificate for `pat` by exhaustive
    bag-growth search. SAT verdicts are checked by the verifier before
    they are returned.
    """
    pat.check_fits(inst)
    budget = budget or Budget.default()
    workers = workers or settings.KEMPE_THREADS
    if workers < 1:
        raise BudgetError(f"worker count must be positive, got {workers}")
    problem = rooted_problem(inst, pat, rules)

    if workers == 1:
        status, bags, stats = _solve_serial(problem, budget)
    else:
        status, bags, stats = _solve_parallel(problem, budget, workers)

    if status == FOUND:
        cert = RootedCertificate.from_class_bags(inst, [iter_bits(b) for b in bags])
        violations = verify(inst, pat, cert)
        if violations:
            raise SolverError(f"search returned an invalid certificate: {violations[0].detail}")
        verdict = SolveVerdict(SAT, cert, stats)
    elif status == FAIL:
        verdict = SolveVerdict(UNSAT, None, stats, EXHAUSTIVE)
    else:
        verdict = SolveVerdict(BUDGET_EXCEEDED, None, stats)

    logger.debug(
        f"solve k={inst.k} n={inst.graph.n} pattern_edges={len(pat.edges)}: "
        f"{verdict.status} after {stats.nodes} nodes")
    return verdict


def _stats(engine: BagSearch) -> SearchStats:
    return SearchStats(engine.nodes, engine.max_depth, engine.elapsed(), dict(engine.pruned))


def _solve_serial(problem: SearchProblem, budget: Budget):
    engine = BagSearch(problem, budget.nodes, budget.seconds)
    try:
        bags = engine.run()
    except BudgetExhausted as exc:
        logger.info(f"search stopped: {exc}")
        return 'budget', None, _stats(engine)
    return (FOUND if bags is not None else FAIL), bags, _stats(engine)


def _solve_parallel(problem: SearchProblem, budget: Budget, workers: int):
    """
    Split the tree into open subtrees in depth-first order and search them
    in worker processes. The first subtree in that order holding a model
    decides, so the answer equals the serial one. Once it is known the
    subtrees still queued are cancelled and the running ones are told to
    stop.
    """
    engine = BagSearch(problem, budget.nodes, budget.seconds)
    try:
        frontier = engine.split(engine.initial_state(), workers * SUBTREES_PER_WORKER)
    except BudgetExhausted:
        return 'budget', None, _stats(engine)
    stats = _stats(engine)

    remaining_nodes = max(1, budget.nodes - engine.nodes)
    remaining_secs = max(0.001, budget.seconds - engine.elapsed())
    found, exhausted = None, False

    stop = multiprocessing.Event()
    with ProcessPoolExecutor(max_workers=workers, initializer=init_worker,
                             initargs=(stop,)) as pool:
        futures = []
        for kind, item in frontier:
            if kind == FOUND:
                futures.append(item)
            else:
                futures.append(pool.submit(
                    explore, problem, item, remaining_nodes, remaining_secs))
        for item in futures:
            if isinstance(item, tuple):
                found = item
                break
            status, bags, part = item.result()
            stats = stats.merge(SearchStats(
                part['nodes'], part['max_depth'], part['elapsed'], part['pruned']))
            if status == FOUND:
                found = bags
                break
            if status == 'budget':
                exhausted = True
        stop.set()
        pool.shutdown(wait=True, cancel_futures=True)

    if found is not None:
        return FOUND, found, stats
    return ('budget' if exhausted else FAIL), None, stats

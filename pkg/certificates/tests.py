import itertools
import multiprocessing
import random

from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from generators.enumeration import enumerate_graphs, enumerate_upto
from generators.families import family
from generators.models import PathSystemSpec
from generators.path_systems import random_path_system
from graphs.bits import bit, is_connected_mask, neighborhood
from graphs.models import Graph
from kempe.chains import h_graph
from kempe.models import ColoredInstance
from kempe.transforms import complete_transversal
from utils.base.constants import PRUNING_RULES
from utils.base.exceptions import BudgetError, PatternError
from zmodel.doubling import z_of

from .models import (BUDGET_EXCEEDED, EXHAUSTIVE, SAT, UNSAT, Budget,
                     RootedCertificate, TargetPattern)
from .reduction import reduce_for_sat, solve_reduced
from .serializers import (CertificateSerializer, SolveVerdictSerializer,
                          TargetPatternSerializer, VerifyReportSerializer)
from .search import BagSearch, explore, init_worker, stop_requested
from .solver import check_rules, rooted_problem, solve
from .verifier import is_valid, verify

SMALL = Budget(10 ** 6, 60.0)


def full_pattern(inst):
    return TargetPattern.full(h_graph(inst))


def ring_bags(n):
    """Bags {t_i, bar t_(i+1)} of the doubled n-cycle, by class"""
    return [{2 * i, 2 * ((i + 1) % n) + 1} for i in range(n)]


def random_instance(seed, max_n=9, max_k=4):
    rng = random.Random(seed)
    k = rng.randint(2, max_k)
    n = rng.randint(k, max_n)
    class_of = list(range(k)) + [rng.randrange(k) for _ in range(n - k)]
    edges = [(u, v) for v in range(n) for u in range(v)
             if class_of[u] != class_of[v] and rng.random() < 0.4]
    classes = [[v for v in range(n) if class_of[v] == c] for c in range(k)]
    inst = ColoredInstance.build(Graph.from_edges(n, edges), classes, range(k))
    pat = TargetPattern.build(k, [e for e in h_graph(inst).edges if rng.random() < 0.7])
    return inst, pat


def brute_force_sat(inst, pat):
    """Every assignment of the non-representatives to a bag or to no bag"""
    adj = inst.graph.masks
    free = [v for v in range(inst.graph.n) if v not in inst.reps]
    for choice in itertools.product(range(inst.k + 1), repeat=len(free)):
        bags = [bit(r) for r in inst.reps]
        for v, c in zip(free, choice):
            if c < inst.k:
                bags[c] |= bit(v)
        if not all(is_connected_mask(adj, b) for b in bags):
            continue
        if all(neighborhood(adj, bags[s]) & bags[t] for s, t in pat.edges):
            return True
    return False


class TargetPatternTestCase(SimpleTestCase):

    def test_build_normalizes(self):
        pat = TargetPattern.build(3, [(2, 0), (1, 2), (0, 2)])
        self.assertEqual(pat.edges, ((0, 2), (1, 2)))
        self.assertEqual(pat.graph.edge_count, 2)

    def test_build_errors(self):
        with self.assertRaises(PatternError):
            TargetPattern.build(3, [(0, 3)])
        with self.assertRaises(PatternError):
            TargetPattern.build(3, [(1, 1)])

    def test_check_fits(self):
        inst = z_of(family('path', 3)).inst
        TargetPattern.build(3, [(0, 1)]).check_fits(inst)
        with self.assertRaises(PatternError):
            TargetPattern.build(3, [(0, 2)]).check_fits(inst)
        with self.assertRaises(PatternError):
            TargetPattern.build(4, []).check_fits(inst)

    def test_serializer(self):
        serializer = TargetPatternSerializer(data={'k': 3, 'edges': [[0, 1], [1, 2]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), TargetPattern(3, ((0, 1), (1, 2))))

        serializer = TargetPatternSerializer(data={'k': 2, 'edges': [[0, 2]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('edges', serializer.errors)


class VerifierTestCase(SimpleTestCase):

    def setUp(self):
        self.z = z_of(family('cycle', 5))
        self.pat = full_pattern(self.z.inst)

    def test_singletons_on_k5(self):
        inst = ColoredInstance.singletons(family('complete', 5))
        cert = RootedCertificate.from_class_bags(inst, [[v] for v in range(5)])
        self.assertTrue(is_valid(inst, full_pattern(inst), cert))

    def test_doubled_cycle_ring_bags(self):
        cert = RootedCertificate.from_class_bags(self.z.inst, ring_bags(5))
        self.assertEqual(verify(self.z.inst, self.pat, cert), [])

    def test_shrunken_bag_leaves_edge_uncovered(self):
        bags = ring_bags(5)
        bags[0] = {0}
        cert = RootedCertificate.from_class_bags(self.z.inst, bags)
        kinds = {v.kind for v in verify(self.z.inst, self.pat, cert)}
        self.assertEqual(kinds, {'uncovered'})

    def test_overlap_and_disconnected(self):
        bags = ring_bags(5)
        bags[1] = {2, 3, 8}
        cert = RootedCertificate.from_class_bags(self.z.inst, bags)
        violations = verify(self.z.inst, self.pat, cert)
        kinds = {v.kind for v in violations}
        self.assertIn('overlap', kinds)
        overlap = next(v for v in violations if v.kind == 'overlap')
        self.assertEqual(overlap.witness, (3, 0, 2))

        bags = ring_bags(5)
        bags[0] = {0, 5}
        cert = RootedCertificate.from_class_bags(self.z.inst, bags)
        disconnected = [v for v in verify(self.z.inst, self.pat, cert)
                        if v.kind == 'disconnected']
        self.assertEqual(disconnected[0].witness, ((0,), (5,)))

    def test_structural_violations(self):
        cert = RootedCertificate({0: frozenset({0, 3}), 1: frozenset({1})})
        kinds = {v.kind for v in verify(self.z.inst, self.pat, cert)}
        self.assertTrue({'unknown-root', 'missing-bag'} <= kinds)

        bags = ring_bags(5)
        bags[2] = {7}
        cert = RootedCertificate.from_class_bags(self.z.inst, bags)
        kinds = {v.kind for v in verify(self.z.inst, self.pat, cert)}
        self.assertIn('root-missing', kinds)

        bags = ring_bags(5)
        bags[3] = {6, 99}
        cert = RootedCertificate.from_class_bags(self.z.inst, bags)
        kinds = {v.kind for v in verify(self.z.inst, self.pat, cert)}
        self.assertIn('out-of-range', kinds)

    def test_pattern_size_mismatch(self):
        cert = RootedCertificate.from_class_bags(self.z.inst, ring_bags(5))
        violations = verify(self.z.inst, TargetPattern(4, ()), cert)
        self.assertEqual([v.kind for v in violations], ['pattern'])

    @given(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=9))
    def test_mutation_never_passes_silently(self, root, intruder):
        bags = ring_bags(5)
        if intruder in bags[root]:
            return
        bags[root] = bags[root] | {intruder}
        cert = RootedCertificate.from_class_bags(self.z.inst, bags)
        owner = next(i for i, bag in enumerate(ring_bags(5)) if intruder in bag)
        self.assertFalse(is_valid(self.z.inst, self.pat, cert), (owner, root))

    def test_serializers(self):
        serializer = CertificateSerializer(data={'bags': {'0': [0, 3], '2': [2]}})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        cert = serializer.save()
        self.assertEqual(cert.bags, {0: frozenset({0, 3}), 2: frozenset({2})})
        self.assertEqual(CertificateSerializer(cert).data, {'bags': {'0': [0, 3], '2': [2]}})

        serializer = CertificateSerializer(data={'bags': {'x': [0]}})
        self.assertFalse(serializer.is_valid())
        serializer = CertificateSerializer(data={'bags': {'0': [0, 0]}})
        self.assertFalse(serializer.is_valid())

        report = VerifyReportSerializer({'ok': False, 'violations': verify(
            self.z.inst, self.pat, RootedCertificate({}))}).data
        self.assertFalse(report['ok'])
        self.assertEqual(report['violations'][0]['kind'], 'missing-bag')


class SolveTestCase(SimpleTestCase):

    def test_g7_has_no_certificate(self):
        inst = z_of(family('g7')).inst
        verdict = solve(inst, full_pattern(inst))
        self.assertEqual((verdict.status, verdict.unsat_kind), (UNSAT, EXHAUSTIVE))
        self.assertIsNone(verdict.certificate)
        self.assertGreater(verdict.stats.nodes, 0)

    def test_completed_g7_has_no_k7_certificate(self):
        inst = complete_transversal(z_of(family('g7')).inst)
        pat = full_pattern(inst)
        self.assertEqual(len(pat.edges), 21)
        self.assertEqual(solve(inst, pat).status, UNSAT)

    def test_doubled_five_cycle(self):
        inst = z_of(family('cycle', 5)).inst
        verdict = solve(inst, full_pattern(inst))
        self.assertEqual(verdict.status, SAT)
        self.assertTrue(is_valid(inst, full_pattern(inst), verdict.certificate))

    def test_every_small_doubled_graph(self):
        for base in enumerate_upto(6):
            inst = z_of(base).inst
            verdict = solve(inst, full_pattern(inst), SMALL)
            self.assertEqual(verdict.status, SAT, base.edges)

    def test_matches_brute_force(self):
        for seed in range(300):
            inst, pat = random_instance(seed)
            verdict = solve(inst, pat, SMALL)
            self.assertEqual(verdict.sat, brute_force_sat(inst, pat), seed)

    def test_disabling_rules_keeps_verdicts(self):
        corpus = [random_instance(seed) for seed in range(40)]
        corpus += [(z_of(g).inst, full_pattern(z_of(g).inst))
                   for g in (family('cycle', 5), family('complete', 4), family('prism'))]
        for inst, pat in corpus:
            expected = solve(inst, pat, SMALL).status
            for rule in PRUNING_RULES:
                kept = [r for r in PRUNING_RULES if r != rule]
                self.assertEqual(solve(inst, pat, SMALL, rules=kept).status, expected, rule)
            self.assertEqual(solve(inst, pat, SMALL, rules=()).status, expected)

    def test_pruning_is_counted(self):
        inst = z_of(family('g7')).inst
        verdict = solve(inst, full_pattern(inst))
        self.assertTrue(set(verdict.stats.pruned) <= set(PRUNING_RULES) | {'stuck'})

    def test_workers_agree_with_serial(self):
        cases = [random_instance(seed) for seed in range(5)]
        cases.append((z_of(family('prism')).inst, full_pattern(z_of(family('prism')).inst)))
        for inst, pat in cases:
            serial = solve(inst, pat, SMALL, workers=1)
            parallel = solve(inst, pat, SMALL, workers=2)
            self.assertEqual(serial.status, parallel.status)
            self.assertEqual(serial.certificate, parallel.certificate)

    def test_stop_signal_ends_running_subtrees(self):
        inst = z_of(family('g7')).inst
        problem = rooted_problem(inst, full_pattern(inst))
        state = BagSearch(problem, 1, 1.0).initial_state()
        stop = multiprocessing.Event()
        init_worker(stop)
        try:
            self.assertFalse(stop_requested())
            stop.set()
            status, bags, part = explore(problem, state, 10 ** 6, 60.0)
            self.assertEqual((status, bags, part['nodes']), ('budget', None, 0))
        finally:
            init_worker(None)
        self.assertFalse(stop_requested())

    def test_budget_exceeded(self):
        inst = z_of(family('g7')).inst
        verdict = solve(inst, full_pattern(inst), Budget(5, 60.0))
        self.assertEqual(verdict.status, BUDGET_EXCEEDED)
        self.assertIsNone(verdict.unsat_kind)

    def test_malformed_budgets(self):
        for nodes, seconds in ((0, 1.0), (10, 0), (True, 1.0), (10, 'soon')):
            with self.assertRaises(BudgetError):
                Budget(nodes, seconds)
        with self.assertRaises(BudgetError):
            check_rules(['reachability', 'intuition'])
        inst = z_of(family('cycle', 5)).inst
        with self.assertRaises(BudgetError):
            solve(inst, full_pattern(inst), workers=-1)

    def test_pattern_must_fit(self):
        inst = z_of(family('path', 3)).inst
        with self.assertRaises(PatternError):
            solve(inst, TargetPattern.build(3, [(0, 2)]))

    def test_serializer(self):
        inst = z_of(family('cycle', 5)).inst
        data = SolveVerdictSerializer(solve(inst, full_pattern(inst))).data
        self.assertEqual(data['status'], 'SAT')
        self.assertEqual(len(data['certificate']['bags']), 5)
        self.assertIsNone(data['unsat_kind'])


class PropertySuiteTestCase(SimpleTestCase):

    def check_patterns(self, patterns, trials):
        for pattern in patterns:
            for seed in range(trials):
                inst = random_path_system(PathSystemSpec(
                    pattern, seed=seed, extra_edge_prob=0.15))
                pat = TargetPattern.from_graph(pattern)
                verdict = solve(inst, pat, SMALL)
                self.assertEqual(verdict.status, SAT, (pattern.edges, seed))

    def test_graphs_on_four_vertices(self):
        self.check_patterns(list(enumerate_graphs(4)), 100)

    def test_five_vertex_six_edge_graphs(self):
        self.check_patterns([family(name) for name in ('hourglass', 'k23', 'c5plus')], 100)


class ReductionTestCase(SimpleTestCase):

    def two_paths(self):
        # two 2-colored paths 0-2-3-1 and 0-4-5-1 between the representatives
        g = Graph.from_edges(6, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)])
        return ColoredInstance.build(g, [[0, 3, 5], [1, 2, 4]], [0, 1])

    def test_keeps_one_path(self):
        inst = self.two_paths()
        pat = TargetPattern.build(2, [(0, 1)])
        reduced = reduce_for_sat(inst, pat)
        self.assertEqual(reduced.inst.graph.n, 4)
        self.assertEqual(reduced.inst.graph.edge_count, 3)
        verdict = solve_reduced(reduced, pat)
        self.assertTrue(is_valid(inst, pat, verdict.certificate))

    def test_minimal_system_is_a_fixed_point(self):
        inst = random_path_system(PathSystemSpec(family('cycle', 4), seed=2))
        pat = TargetPattern.from_graph(family('cycle', 4))
        reduced = reduce_for_sat(inst, pat)
        self.assertEqual(reduced.inst.graph, inst.graph)
        self.assertEqual(reduced.origin, {v: v for v in range(inst.graph.n)})

    def test_missing_chain(self):
        inst = ColoredInstance.singletons(Graph.empty(2))
        with self.assertRaises(PatternError):
            reduce_for_sat(inst, TargetPattern.build(2, [(0, 1)]))

    def test_unsat_is_never_reported(self):
        inst = z_of(family('g7')).inst
        pat = full_pattern(inst)
        self.assertIsNone(solve_reduced(reduce_for_sat(inst, pat), pat))

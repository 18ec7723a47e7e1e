import itertools

from django.test import SimpleTestCase

from certificates.models import COUNTING, SAT, UNSAT, TargetPattern
from certificates.verifier import verify
from generators.enumeration import enumerate_graphs, enumerate_upto
from generators.families import family
from graphs.models import Graph
from kempe.chains import h_graph
from utils.base.exceptions import GraphError, PermutationError, SizeLimitError

from .counting import (anticlique_bound, counting_unsat_check, independent_sets,
                       regular_girth_premises)
from .decide import decide
from .doubling import bar, second_copy, z_of
from .models import INCONCLUSIVE, UNSAT_CERTIFIED, GoodPermutation, ZInstance
from .permutations import (find_good_permutation, is_good_permutation,
                           permutation_certificate)
from .serializers import CountingReportSerializer, ZInstanceSerializer


def brute_force_good_permutation(g):
    return any(is_good_permutation(g, f)[0] for f in itertools.permutations(range(g.n)))


def on_short_cycle(g, v):
    """Whether v lies on a cycle with three or four vertices"""
    nbrs = g.neighbors(v)
    for a, b in itertools.combinations(nbrs, 2):
        if g.has_edge(a, b):
            return True
        if any(w != v for w in set(g.neighbors(a)) & set(g.neighbors(b))):
            return True
    return False


class DoublingTestCase(SimpleTestCase):

    def test_sizes(self):
        z = z_of(Graph.from_edges(2, [(0, 1)]))
        self.assertEqual((z.size, z.inst.graph.edge_count), (4, 3))
        self.assertEqual(z_of(family('g7')).size, 14)
        empty = z_of(Graph.empty(3))
        self.assertEqual((empty.size, empty.inst.graph.edge_count), (6, 0))
        with self.assertRaises(GraphError):
            z_of(Graph.empty(0))

    def test_edge_rule(self):
        base = family('c5plus')
        z = z_of(base)
        self.assertEqual(z.inst.graph.edge_count, 3 * base.edge_count)
        for u, v in itertools.combinations(range(z.size), 2):
            (x, i), (y, j) = ZInstance.label(u), ZInstance.label(v)
            expected = base.has_edge(x, y) and not (i == 1 and j == 1)
            self.assertEqual(z.inst.graph.has_edge(u, v), expected, (u, v))

    def test_canonical_coloring(self):
        z = z_of(family('cycle', 5))
        self.assertEqual(z.inst.reps, (0, 2, 4, 6, 8))
        self.assertEqual(z.inst.class_lists[3], [ZInstance.vertex(3, 1), ZInstance.vertex(3, 2)])
        self.assertFalse(any(z.inst.graph.has_edge(s, t)
                             for s, t in itertools.combinations(z.inst.reps, 2)))

    def test_bar(self):
        z = z_of(family('g7'))
        self.assertEqual(bar(z, ZInstance.vertex(4, 1)), ZInstance.vertex(4, 2))
        for v in range(z.size):
            self.assertEqual(bar(z, bar(z, v)), v)
            self.assertEqual(z.inst.class_of(v), z.inst.class_of(bar(z, v)))
        with self.assertRaises(GraphError):
            bar(z, z.size)

    def test_second_copy_is_the_base(self):
        for base in enumerate_graphs(5):
            self.assertEqual(second_copy(z_of(base)), base)

    def test_serializer(self):
        data = ZInstanceSerializer(z_of(family('path', 2))).data
        self.assertEqual(data['base'], {'n': 2, 'edges': [[0, 1]]})
        self.assertEqual(data['instance']['transversal'], [0, 2])
        self.assertEqual(data['encoding'], '(x, i) -> 2x + (i - 1)')


class GoodPermutationTestCase(SimpleTestCase):

    def test_triangle_and_square(self):
        for g in (family('complete', 3), family('cycle', 4)):
            perm = find_good_permutation(g)
            self.assertIsNotNone(perm)
            self.assertTrue(is_good_permutation(g, perm.f)[0])
        self.assertEqual(is_good_permutation(family('complete', 3), (1, 2, 0)), (True, ''))

    def test_g7_has_none(self):
        self.assertIsNone(find_good_permutation(family('g7')))

    def test_petersen_has_none(self):
        self.assertIsNone(find_good_permutation(family('petersen')))

    def test_conditions_are_named(self):
        c6 = family('cycle', 6)
        ok, reason = is_good_permutation(c6, (2, 3, 4, 5, 0, 1))
        self.assertFalse(ok)
        self.assertTrue(reason.startswith('(i)'))
        ok, reason = is_good_permutation(c6, (0, 0, 1, 2, 3, 4))
        self.assertFalse(ok)

    def test_size_limit(self):
        with self.assertRaises(SizeLimitError):
            find_good_permutation(Graph.empty(13))

    def test_matches_brute_force(self):
        for g in enumerate_upto(6):
            found = find_good_permutation(g) is not None
            self.assertEqual(found, brute_force_good_permutation(g), g.edges)

    def test_degree_three_vertices_lie_on_short_cycles(self):
        for n in range(1, 8):
            for g in enumerate_graphs(n):
                if find_good_permutation(g) is None:
                    continue
                for v in range(g.n):
                    if g.degree(v) >= 3:
                        self.assertTrue(on_short_cycle(g, v), (g.edges, v))

    def test_certificates_have_pairs(self):
        for g in enumerate_upto(6):
            perm = find_good_permutation(g)
            if perm is None:
                continue
            z = z_of(g)
            cert = permutation_certificate(z, perm)
            self.assertEqual(set(cert.sizes().values()), {2})
            self.assertEqual(verify(z.inst, TargetPattern.full(h_graph(z.inst)), cert), [])

    def test_certificate_rejects_bad_permutation(self):
        z = z_of(family('cycle', 6))
        with self.assertRaises(PermutationError):
            permutation_certificate(z, GoodPermutation((2, 3, 4, 5, 0, 1)))


class CountingTestCase(SimpleTestCase):

    def test_independent_sets(self):
        sets = independent_sets(family('path', 3))
        self.assertEqual(sorted(sets), [0b001, 0b010, 0b100, 0b101])

    def test_anticlique_bound(self):
        bound = anticlique_bound(family('g7'), 1 << 6)
        self.assertEqual(bound.neighborhood, (0, 3))
        self.assertEqual((bound.size_one, bound.size_two, bound.size_three), (1, 4, 2))
        self.assertEqual(bound.bound, 15)
        self.assertTrue(bound.expanding)

    def test_g7(self):
        report = counting_unsat_check(z_of(family('g7')))
        self.assertTrue(report.applicable)
        self.assertFalse(report.good_perm_exists)
        self.assertIsNone(report.violating_anticlique)
        self.assertEqual(report.verdict, UNSAT_CERTIFIED)
        self.assertEqual((report.min_bound, report.vertex_count), (15, 14))
        self.assertFalse(report.regular_premises)

    def test_petersen(self):
        report = counting_unsat_check(z_of(family('petersen')))
        self.assertEqual(report.verdict, UNSAT_CERTIFIED)
        self.assertTrue(report.regular_premises)
        self.assertTrue(all(b.expanding for b in report.bounds))
        self.assertGreater(report.min_bound, report.vertex_count)

    def test_five_cycle_is_inconclusive(self):
        report = counting_unsat_check(z_of(family('cycle', 5)))
        self.assertTrue(report.applicable)
        self.assertTrue(report.good_perm_exists)
        self.assertEqual(report.verdict, INCONCLUSIVE)

    def test_triangles_are_not_applicable(self):
        report = counting_unsat_check(z_of(family('complete', 3)))
        self.assertFalse(report.applicable)
        self.assertEqual(report.verdict, INCONCLUSIVE)
        self.assertEqual(report.bounds, ())

    def test_regular_girth_premises(self):
        self.assertTrue(regular_girth_premises(family('petersen')))
        self.assertFalse(regular_girth_premises(family('cycle', 5)))
        self.assertFalse(regular_girth_premises(family('complete', 4)))
        self.assertFalse(regular_girth_premises(family('complete_bipartite', 3, 3)))

    def test_serializer(self):
        report = counting_unsat_check(z_of(family('g7')))
        data = CountingReportSerializer(report).data
        self.assertEqual(data['verdict'], 'UNSAT_CERTIFIED')
        self.assertEqual(data['min_bound'], 15)
        self.assertIsNone(data['good_permutation'])
        self.assertEqual(len(data['bounds']), len(report.bounds))
        self.assertTrue(CountingReportSerializer(data=data).is_valid())


class DecideTestCase(SimpleTestCase):

    def test_good_permutation_decides_sat(self):
        verdict = decide(z_of(family('cycle', 5)))
        self.assertEqual(verdict.status, SAT)
        self.assertEqual(set(verdict.certificate.sizes().values()), {2})

    def test_counting_decides_unsat(self):
        verdict = decide(z_of(family('g7')))
        self.assertEqual((verdict.status, verdict.unsat_kind), (UNSAT, COUNTING))
        self.assertIsNone(verdict.certificate)

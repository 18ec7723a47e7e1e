import itertools

import networkx as nx
from django.test import SimpleTestCase

from certificates.models import Budget
from generators.enumeration import enumerate_graphs, enumerate_upto
from generators.families import family
from generators.models import PathSystemSpec
from generators.path_systems import random_path_system
from graphs.bits import is_connected_mask, neighborhood
from graphs.models import Graph
from graphs.operations import cycle_rank
from kempe.models import ColoredInstance
from utils.base.exceptions import InstanceError, SizeLimitError

from .models import K33, K5, MinorEmbedding
from .remarks import validate_remarks
from .search import (_reduce_host, check_embedding, euler_excludes, has_minor,
                     is_planar, nonplanarity_witness)
from .serializers import MinorEmbeddingSerializer, RemarkReportSerializer

SMALL = Budget(10 ** 6, 60.0)


def naive_minor(g, h):
    """Disjoint connected vertex sets placed one pattern vertex at a time"""
    connected = [m for m in range(1, 1 << g.n) if is_connected_mask(g.masks, m)]

    def place(v, used, masks):
        if v == h.n:
            return True
        for m in connected:
            if m & used:
                continue
            if any(not neighborhood(g.masks, masks[u]) & m for u in h.neighbors(v) if u < v):
                continue
            if place(v + 1, used | m, masks + [m]):
                return True
        return False

    return place(0, 0, [])


def to_nx(g):
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges)
    return graph


class HasMinorTestCase(SimpleTestCase):

    def test_petersen_has_k5(self):
        g = family('petersen')
        emb = has_minor(g, family('complete', 5), SMALL)
        self.assertIsNotNone(emb)
        self.assertEqual(check_embedding(g, family('complete', 5), emb), [])

    def test_trivial_answers(self):
        self.assertIsNone(has_minor(family('complete', 4), family('complete', 5)))
        self.assertIsNone(has_minor(family('complete', 5), family('complete_bipartite', 3, 3)))
        self.assertEqual(has_minor(family('path', 3), Graph.empty(0)).bags, {})

    def test_size_limits(self):
        with self.assertRaises(SizeLimitError):
            has_minor(family('complete', 10), Graph.empty(9))
        with self.assertRaises(SizeLimitError):
            has_minor(Graph.empty(41), family('complete', 3))

    def test_disconnected_host(self):
        g = Graph.from_edges(8, [(u, v) for part in (range(4), range(4, 8))
                                 for u, v in itertools.combinations(part, 2)])
        h = family('complete', 4)
        emb = has_minor(g, h, SMALL)
        self.assertEqual(check_embedding(g, h, emb), [])
        self.assertIsNone(has_minor(g, family('complete', 5), SMALL))

    def test_subdivided_host_is_contracted_back(self):
        # every edge of K5 subdivided once
        edges = []
        for index, (u, v) in enumerate(itertools.combinations(range(5), 2)):
            edges += [(u, 5 + index), (v, 5 + index)]
        g = Graph.from_edges(15, edges)
        emb = has_minor(g, family('complete', 5), SMALL)
        self.assertEqual(check_embedding(g, family('complete', 5), emb), [])
        self.assertEqual(sorted(min(bag) for bag in emb.bags.values()), [0, 1, 2, 3, 4])

    def test_host_cleanup(self):
        k4_and_pendant = Graph.from_edges(5, list(itertools.combinations(range(4), 2)) + [(0, 4)])
        reduced, groups = _reduce_host(k4_and_pendant, 2)
        self.assertEqual((reduced.n, reduced.edge_count), (4, 6))
        self.assertEqual(sorted(sorted(group) for group in groups), [[0], [1], [2], [3]])
        # K4 with the edge 2-3 subdivided by vertex 4
        subdivided = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])
        reduced, groups = _reduce_host(subdivided, 3)
        self.assertEqual((reduced.n, reduced.edge_count), (4, 6))
        self.assertEqual(sorted(sorted(group) for group in groups), [[0], [1], [2, 4], [3]])
        emb = has_minor(subdivided, family('complete', 4), SMALL)
        self.assertEqual(check_embedding(subdivided, family('complete', 4), emb), [])

    def test_matches_naive_enumerator(self):
        for g in enumerate_upto(6):
            self.assert_matches_naive(g)

    def test_matches_naive_enumerator_on_seven_vertices(self):
        for g in list(enumerate_graphs(7))[::60]:
            self.assert_matches_naive(g)

    def assert_matches_naive(self, g):
        for h in (family('complete', 3), family('complete', 4), family('cycle', 4)):
            emb = has_minor(g, h, SMALL)
            self.assertEqual(emb is not None, naive_minor(g, h), (g.edges, h.edges))
            if emb is not None:
                self.assertEqual(check_embedding(g, h, emb), [])

    def test_triangle_minor_iff_cycle(self):
        triangle = family('complete', 3)
        for g in enumerate_upto(7):
            self.assertEqual(has_minor(g, triangle, SMALL) is not None, cycle_rank(g) > 0, g.edges)


class CheckEmbeddingTestCase(SimpleTestCase):

    def test_violations(self):
        g = family('path', 4)
        h = family('path', 3)
        self.assertEqual(check_embedding(g, h, MinorEmbedding(
            {0: frozenset({0}), 1: frozenset({1, 2}), 2: frozenset({3})})), [])
        kinds = [v.kind for v in check_embedding(g, h, MinorEmbedding(
            {0: frozenset({0, 2}), 1: frozenset({2}), 5: frozenset({3})}))]
        self.assertEqual(kinds, ['unknown-root', 'missing-bag', 'overlap', 'disconnected', 'uncovered'])
        uncovered = check_embedding(g, h, MinorEmbedding(
            {0: frozenset({0}), 1: frozenset({3}), 2: frozenset({2})}))
        self.assertEqual([(v.kind, v.witness) for v in uncovered], [('uncovered', (0, 1))])

    def test_serializer(self):
        serializer = MinorEmbeddingSerializer(data={'bags': {'0': [1, 2], '1': [0]}})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        emb = serializer.save()
        self.assertEqual(emb.bags, {0: frozenset({1, 2}), 1: frozenset({0})})
        self.assertEqual(MinorEmbeddingSerializer(emb).data, {'bags': {'0': [1, 2], '1': [0]}})
        self.assertFalse(MinorEmbeddingSerializer(data={'bags': {'x': [1]}}).is_valid())


class PlanarityTestCase(SimpleTestCase):

    def test_named_graphs(self):
        self.assertTrue(is_planar(family('complete', 4)))
        self.assertTrue(is_planar(family('prism')))
        self.assertFalse(is_planar(family('complete', 5)))
        self.assertFalse(is_planar(family('petersen'), SMALL))

    def test_wagner_graph_needs_k33(self):
        g = family('wagner')
        self.assertFalse(euler_excludes(g))
        name, emb = nonplanarity_witness(g, SMALL)
        self.assertEqual(name, K33)
        self.assertEqual(check_embedding(g, family('complete_bipartite', 3, 3), emb), [])
        self.assertFalse(is_planar(g, SMALL))

    def test_euler_bound(self):
        self.assertTrue(euler_excludes(family('complete', 5)))
        self.assertTrue(euler_excludes(family('complete_bipartite', 3, 3)))
        self.assertFalse(euler_excludes(family('petersen')))
        for g in enumerate_upto(6):
            if euler_excludes(g):
                self.assertFalse(is_planar(g, SMALL), g.edges)

    def test_agrees_with_networkx(self):
        for g in enumerate_upto(6):
            planar, _ = nx.check_planarity(to_nx(g))
            self.assertEqual(is_planar(g, SMALL), planar, g.edges)


class RemarksTestCase(SimpleTestCase):

    def test_complete_pattern_instances(self):
        k5 = family('complete', 5)
        for seed in range(50):
            inst = random_path_system(PathSystemSpec(k5, seed=seed, max_internal=4))
            report = validate_remarks(inst, SMALL)
            self.assertTrue(report.premises_ok, seed)
            self.assertFalse(report.planar, seed)
            self.assertTrue(report.has_k5_minor, seed)
            self.assertTrue(report.consistent, seed)
            self.assertEqual(check_embedding(inst.graph, k5, report.k5_embedding), [], seed)

    def test_kempe_complete_instances(self):
        for seed in range(3):
            inst = random_path_system(PathSystemSpec(
                family('cycle', 5), seed=seed, kempe_complete=True))
            report = validate_remarks(inst, SMALL)
            self.assertTrue(report.premises_ok)
            self.assertEqual((report.planar, report.has_k5_minor), (False, True))

    def test_nine_of_ten_pairs(self):
        pattern = Graph.from_edges(5, [e for e in family('complete', 5).edges if e != (3, 4)])
        inst = random_path_system(PathSystemSpec(pattern, seed=2))
        report = validate_remarks(inst, SMALL)
        self.assertFalse(report.premises_ok)
        self.assertTrue(report.consistent)
        self.assertTrue(report.planar)
        self.assertIsNone(report.k5_embedding)

    def test_wrong_class_count(self):
        with self.assertRaises(InstanceError):
            validate_remarks(ColoredInstance.singletons(family('complete', 4)))

    def test_serializer(self):
        inst = ColoredInstance.singletons(family('complete', 5))
        data = RemarkReportSerializer(validate_remarks(inst, SMALL)).data
        self.assertEqual(data['nonplanarity_pattern'], K5)
        self.assertTrue(data['consistent'])
        self.assertEqual(len(data['k5_embedding']['bags']), 5)
        self.assertTrue(RemarkReportSerializer(data=data).is_valid())

import networkx as nx
from django.test import SimpleTestCase

from graphs.models import Graph
from graphs.operations import canonical_key
from kempe.chains import h_graph, is_kempe_coloring
from utils.base.exceptions import FamilyError, SizeLimitError

from .enumeration import enumerate_graphs, enumerate_upto
from .families import family
from .models import FamilySpec, PathSystemSpec
from .path_systems import build_path_system, random_path_system
from .serializers import FamilySpecSerializer, PathSystemSpecSerializer


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class FamilyTestCase(SimpleTestCase):

    def test_fixed_families(self):
        expected = {
            'petersen': (10, 15), 'hourglass': (5, 6), 'k23': (5, 6),
            'c5plus': (5, 6), 'prism': (6, 9), 'wagner': (8, 12), 'g7': (7, 8),
        }
        for name, (n, m) in expected.items():
            g = family(name)
            self.assertEqual((g.n, g.edge_count), (n, m), name)

    def test_sized_families(self):
        self.assertEqual(family('cycle', 5).edge_count, 5)
        self.assertEqual(family('path', 4).edge_count, 3)
        self.assertEqual(family('complete', 5).edge_count, 10)
        self.assertEqual(family('complete_bipartite', 3, 3).edge_count, 9)
        wheel = family('wheel', 5)
        self.assertEqual((wheel.n, wheel.edge_count), (6, 10))
        self.assertEqual(wheel.degree(5), 5)

    def test_petersen_is_cubic_with_girth_five(self):
        g = to_nx(family('petersen'))
        self.assertEqual({d for _, d in g.degree()}, {3})
        self.assertEqual(nx.girth(g), 5)
        self.assertTrue(nx.is_isomorphic(g, nx.petersen_graph()))

    def test_g7_apex_meets_antipodal_vertices(self):
        g = family('g7')
        self.assertEqual(g.neighbors(6), (0, 3))
        self.assertEqual(g.degrees(), (3, 2, 2, 3, 2, 2, 2))

    def test_invalid_specs(self):
        with self.assertRaises(FamilyError):
            FamilySpec('dodecahedron')
        with self.assertRaises(FamilyError):
            FamilySpec('cycle', 2)
        with self.assertRaises(FamilyError):
            FamilySpec('petersen', 10)
        with self.assertRaises(FamilyError):
            FamilySpec('complete_bipartite', 2)
        with self.assertRaises(FamilyError):
            FamilySpec('path', 3, 3)

    def test_spec_serializer(self):
        serializer = FamilySpecSerializer(data={'name': 'wheel', 'n': 5})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(family(serializer.save()).n, 6)

        serializer = FamilySpecSerializer(data={'name': 'nope'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('name', serializer.errors)


class EnumerationTestCase(SimpleTestCase):

    def test_class_counts(self):
        counts = [sum(1 for _ in enumerate_graphs(n)) for n in range(1, 7)]
        self.assertEqual(counts, [1, 2, 4, 11, 34, 156])
        self.assertEqual(sum(1 for _ in enumerate_upto(6)), 208)

    def test_classes_are_distinct_and_match_the_atlas(self):
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 5]
        ours = list(enumerate_graphs(5))
        self.assertEqual(len(ours), len(atlas))
        self.assertEqual(len({canonical_key(g) for g in ours}), len(ours))
        for g in ours:
            self.assertTrue(any(nx.is_isomorphic(to_nx(g), a) for a in atlas))

    def test_order_is_stable(self):
        first = [g.edges for g in enumerate_graphs(4)]
        second = [g.edges for g in enumerate_graphs(4)]
        self.assertEqual(first, second)

    def test_limit(self):
        with self.assertRaises(SizeLimitError):
            list(enumerate_graphs(8))


class PathSystemTestCase(SimpleTestCase):

    def patterns(self):
        yield from enumerate_graphs(4)
        for name in ('hourglass', 'k23', 'c5plus'):
            yield family(name)

    def test_pattern_is_spanning_subgraph_of_h(self):
        for pattern in self.patterns():
            for seed in range(20):
                inst = random_path_system(PathSystemSpec(pattern, seed=seed))
                h = h_graph(inst)
                self.assertEqual(inst.k, pattern.n)
                for s, t in pattern.edges:
                    self.assertTrue(h.graph.has_edge(s, t), (pattern.edges, seed))

    def test_representatives_are_first(self):
        inst = random_path_system(PathSystemSpec(family('k23'), seed=3))
        self.assertEqual(inst.reps, (0, 1, 2, 3, 4))

    def test_seed_determinism(self):
        spec = PathSystemSpec(family('c5plus'), seed=11, extra_edge_prob=0.3)
        self.assertEqual(random_path_system(spec), random_path_system(spec))

    def test_internal_vertices_are_even(self):
        spec = PathSystemSpec(family('complete', 3), seed=5, max_internal=4)
        system = build_path_system(spec)
        extra = system.instance.graph.n - 3
        self.assertEqual(extra % 2, 0)
        self.assertLessEqual(extra, 12)

    def test_rejected_edges_keep_h_equal_to_pattern(self):
        pattern = family('path', 4)
        for seed in range(10):
            system = build_path_system(PathSystemSpec(
                pattern, seed=seed, extra_edge_prob=1.0))
            self.assertEqual(h_graph(system.instance).edges, pattern.edges)

    def test_kempe_complete(self):
        for seed in range(10):
            inst = random_path_system(PathSystemSpec(
                family('cycle', 5), seed=seed, extra_edge_prob=0.2, kempe_complete=True))
            ok, connected = is_kempe_coloring(inst)
            self.assertTrue(ok)
            self.assertEqual(connected, 10)
            self.assertTrue(h_graph(inst).is_complete())

    def test_invalid_specs(self):
        with self.assertRaises(FamilyError):
            PathSystemSpec(family('cycle', 3), max_internal=3)
        with self.assertRaises(FamilyError):
            PathSystemSpec(family('cycle', 3), extra_edge_prob=1.5)
        with self.assertRaises(FamilyError):
            PathSystemSpec(Graph.empty(0))

    def test_spec_serializer(self):
        data = {'pattern': {'n': 3, 'edges': [[0, 1], [1, 2]]}, 'seed': 4}
        serializer = PathSystemSpecSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        spec = serializer.save()
        self.assertEqual(spec.pattern.edges, ((0, 1), (1, 2)))
        self.assertEqual(spec.seed, 4)

        serializer = PathSystemSpecSerializer(data={**data, 'max_internal': 3})
        self.assertFalse(serializer.is_valid())
        self.assertIn('max_internal', serializer.errors)
        serializer = PathSystemSpecSerializer(data={**data, 'extra_edge_prob': 2})
        self.assertFalse(serializer.is_valid())
        self.assertIn('extra_edge_prob', serializer.errors)

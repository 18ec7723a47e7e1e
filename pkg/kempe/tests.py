from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from generators.enumeration import enumerate_upto
from generators.families import family
from graphs.models import Graph
from graphs.operations import canonical_key
from utils.base.exceptions import InstanceError, SizeLimitError, TransformError
from zmodel.doubling import z_of

from .chains import chain_mask, h_graph, is_kempe_coloring, kempe_chains
from .models import AddTransversalEdge, ColoredInstance, DisjointClique
from .serializers import HGraphSerializer, InstanceSerializer
from .transforms import (complete_transversal, contract_instance, drop_classes,
                         sub_instance, transform_instance)


def two_colored_cycle(n=4):
    g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    return ColoredInstance.build(g, [range(0, n, 2), range(1, n, 2)], [0, 1])


class InstanceTestCase(SimpleTestCase):

    def test_build(self):
        inst = two_colored_cycle()
        self.assertEqual(inst.k, 2)
        self.assertEqual(inst.class_lists, [[0, 2], [1, 3]])
        self.assertEqual(inst.class_of(2), 0)
        self.assertEqual(inst.rep_of(3), 1)
        self.assertEqual(inst.rep_mask, 0b11)

    def test_class_must_be_anticlique(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        with self.assertRaises(InstanceError) as ctx:
            ColoredInstance.build(g, [[0], [1, 2]], [0, 1])
        self.assertEqual(ctx.exception.path, 'classes[1]')

    def test_representative_must_be_in_its_class(self):
        g = Graph.from_edges(3, [(0, 1)])
        with self.assertRaises(InstanceError) as ctx:
            ColoredInstance.build(g, [[0, 2], [1]], [1, 0])
        self.assertEqual(ctx.exception.path, 'transversal[0]')

    def test_coloring_must_cover_and_partition(self):
        g = Graph.empty(3)
        with self.assertRaises(InstanceError):
            ColoredInstance.build(g, [[0], [1]], [0, 1])
        with self.assertRaises(InstanceError):
            ColoredInstance.build(g, [[0, 1], [1, 2]], [0, 2])
        with self.assertRaises(InstanceError):
            ColoredInstance.build(g, [[0, 1, 2], []], [0, 1])

    def test_class_limit(self):
        with self.assertRaises(SizeLimitError):
            ColoredInstance.singletons(Graph.empty(17))

    def test_serializer_round_trip(self):
        inst = two_colored_cycle(6)
        data = InstanceSerializer(inst).data
        self.assertEqual(data['classes'], [[0, 2, 4], [1, 3, 5]])
        self.assertEqual(data['transversal'], [0, 1])
        serializer = InstanceSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), inst)

    def test_serializer_error_paths(self):
        data = {'graph': {'n': 3, 'edges': [[0, 1], [1, 2]]},
                'classes': [[0], [1, 2]], 'transversal': [0, 1]}
        serializer = InstanceSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn(1, serializer.errors['classes'])

        data = {'graph': {'n': 3, 'edges': [[0, 1], [1, 1]]},
                'classes': [[0, 2], [1]], 'transversal': [0, 1]}
        serializer = InstanceSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn('graph', serializer.errors)

        data = {'graph': {'n': 2, 'edges': []},
                'classes': [[0], [1]], 'transversal': [0]}
        serializer = InstanceSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn('transversal', serializer.errors)


class KempeChainsTestCase(SimpleTestCase):

    def test_doubled_edge_is_one_path(self):
        z = z_of(Graph.from_edges(2, [(0, 1)]))
        chains = kempe_chains(z.inst)
        self.assertEqual(len(chains), 1)
        self.assertEqual(chains[0].vertices, frozenset(range(4)))
        self.assertEqual(z.inst.graph.edge_count, 3)

    def test_unjoined_singletons(self):
        inst = ColoredInstance.singletons(Graph.empty(2))
        self.assertEqual(kempe_chains(inst), [])
        trivial = kempe_chains(inst, include_trivial=True)
        self.assertEqual(len(trivial), 2)
        self.assertTrue(all(chain.trivial for chain in trivial))

    def test_even_cycle_is_one_chain(self):
        chains = kempe_chains(two_colored_cycle())
        self.assertEqual([c.vertices for c in chains], [frozenset(range(4))])

    def test_chain_mask_holds_representative(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        inst = ColoredInstance.build(g, [[0, 2], [1, 3]], [0, 3])
        self.assertEqual(chain_mask(inst, 0, 1), 0b0011)
        self.assertEqual(chain_mask(inst, 1, 0), 0b1100)

    @given(st.integers(min_value=0, max_value=207))
    def test_every_edge_in_exactly_one_chain(self, index):
        base = list(enumerate_upto(6))[index]
        inst = z_of(base).inst
        for a in range(inst.k):
            for b in range(a + 1, inst.k):
                pair = [c for c in kempe_chains(inst) if (c.class_a, c.class_b) == (a, b)]
                seen = set()
                for chain in pair:
                    self.assertFalse(seen & chain.vertices)
                    seen |= chain.vertices
        for u, v in inst.graph.edges:
            holding = [c for c in kempe_chains(inst) if {u, v} <= c.vertices]
            self.assertEqual(len(holding), 1)


class HGraphTestCase(SimpleTestCase):

    def test_doubled_graph_reproduces_base(self):
        for base in enumerate_upto(6):
            h = h_graph(z_of(base).inst)
            self.assertEqual(h.graph, base)
            self.assertEqual(canonical_key(h.graph), canonical_key(base))

    def test_singletons_on_k5(self):
        h = h_graph(ColoredInstance.singletons(family('complete', 5)))
        self.assertTrue(h.is_complete())
        self.assertEqual(h.reps, (0, 1, 2, 3, 4))

    def test_g7_has_eight_pairs(self):
        inst = z_of(family('g7')).inst
        self.assertEqual(h_graph(inst).graph.edge_count, 8)
        self.assertEqual(is_kempe_coloring(inst), (False, 8))

    def test_kempe_coloring_examples(self):
        self.assertEqual(
            is_kempe_coloring(ColoredInstance.singletons(family('complete', 5))),
            (True, 10))
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        inst = ColoredInstance.build(g, [[0, 3], [1, 2]], [0, 1])
        self.assertEqual(is_kempe_coloring(inst), (False, 0))

    def test_serializer(self):
        inst = two_colored_cycle()
        h = h_graph(inst)
        ok, connected = is_kempe_coloring(inst)
        data = HGraphSerializer({
            'k': h.k, 'edges': h.edges, 'reps': h.reps,
            'kempe_coloring': ok, 'connected_pairs': connected}).data
        self.assertEqual(data['edges'], [[0, 1]])
        self.assertTrue(data['kempe_coloring'])


class TransformTestCase(SimpleTestCase):

    def test_add_transversal_edge(self):
        inst = ColoredInstance.singletons(Graph.empty(2))
        grown = transform_instance(inst, AddTransversalEdge(0, 1))
        self.assertEqual(h_graph(grown).edges, ((0, 1),))
        self.assertIs(transform_instance(grown, AddTransversalEdge(1, 0)), grown)

    def test_add_transversal_edge_errors(self):
        inst = two_colored_cycle()
        with self.assertRaises(TransformError):
            transform_instance(inst, AddTransversalEdge(1, 1))
        with self.assertRaises(TransformError):
            transform_instance(inst, AddTransversalEdge(0, 5))

    def test_disjoint_clique(self):
        inst = ColoredInstance.singletons(Graph.from_edges(3, [(0, 1)]))
        grown = transform_instance(inst, DisjointClique(2))
        self.assertEqual(grown.k, 5)
        self.assertEqual(grown.reps, (0, 1, 2, 3, 4))
        self.assertTrue(h_graph(grown).graph.has_edge(3, 4))
        with self.assertRaises(TransformError):
            transform_instance(inst, DisjointClique(0))
        with self.assertRaises(TransformError):
            transform_instance(inst, DisjointClique(14))

    def test_complete_transversal(self):
        inst = complete_transversal(z_of(family('g7')).inst)
        self.assertTrue(h_graph(inst).is_complete())
        self.assertEqual(inst.graph.edge_count, z_of(family('g7')).inst.graph.edge_count + 13)

    def test_sub_instance(self):
        inst = two_colored_cycle(6)
        sub, vmap = sub_instance(inst, [0, 1, 2, 5])
        self.assertEqual(vmap, {0: 0, 1: 1, 2: 2, 5: 3})
        self.assertEqual(sub.graph.edges, ((0, 1), (0, 3), (1, 2)))
        self.assertEqual(sub.class_lists, [[0, 2], [1, 3]])

        sub, _ = sub_instance(inst, range(6), [(0, 1), (1, 2)])
        self.assertEqual(sub.graph.edge_count, 2)
        with self.assertRaises(TransformError):
            sub_instance(inst, [2, 3])
        with self.assertRaises(TransformError):
            sub_instance(inst, range(6), [(0, 3)])

    def test_drop_classes(self):
        inst = ColoredInstance.singletons(family('complete', 4))
        smaller, vmap, cmap = drop_classes(inst, [1])
        self.assertEqual(smaller.k, 3)
        self.assertEqual(cmap, {0: 0, 2: 1, 3: 2})
        self.assertEqual(vmap, {0: 0, 2: 1, 3: 2})
        with self.assertRaises(TransformError):
            drop_classes(inst, range(4))

    def test_contract_instance(self):
        # path 0-1-2-3-4 colored a b a b a; contract 1-2-3 into class b
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        inst = ColoredInstance.build(g, [[0, 2, 4], [1, 3]], [0, 1])
        merged, vmap = contract_instance(inst, [1, 2, 3], 1)
        self.assertEqual(merged.graph.n, 3)
        self.assertEqual(vmap[1], vmap[2])
        self.assertEqual(merged.class_lists, [[0, 2], [1]])
        self.assertEqual(merged.graph.edges, ((0, 1), (1, 2)))

    def test_contract_instance_errors(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        inst = ColoredInstance.build(g, [[0, 2], [1, 3]], [0, 1])
        with self.assertRaises(TransformError):
            contract_instance(inst, [0, 2], 0)
        with self.assertRaises(TransformError):
            contract_instance(inst, [0, 1, 2], 0)
        with self.assertRaises(TransformError):
            contract_instance(inst, [1, 2], 1)

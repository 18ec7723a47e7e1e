import itertools

import networkx as nx
from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from generators.families import family
from utils.base.exceptions import DocumentParseError, GraphError, SizeLimitError

from .bits import mask_components, mask_of, to_list
from .codec import from_graph6, from_json, read_graph, to_graph6, to_json
from .models import Graph
from .operations import (canonical_key, complement, components, contract,
                         cycle_rank, girth, has_triangle, induced,
                         is_bipartite, is_connected_set, relabel,
                         shortest_path)


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class GraphModelTestCase(SimpleTestCase):

    def test_from_edges_sorts_adjacency(self):
        g = Graph.from_edges(4, [(2, 0), (0, 1), (3, 0)])
        self.assertEqual(g.adjacency[0], (1, 2, 3))
        self.assertEqual(g.edges, ((0, 1), (0, 2), (0, 3)))
        self.assertEqual(g.degrees(), (3, 1, 1, 1))
        self.assertTrue(g.has_edge(2, 0))

    def test_rejects_loops_duplicates_and_range(self):
        with self.assertRaises(GraphError):
            Graph.from_edges(3, [(1, 1)])
        with self.assertRaises(GraphError):
            Graph.from_edges(3, [(0, 1), (1, 0)])
        with self.assertRaises(GraphError):
            Graph.from_edges(3, [(0, 3)])

    def test_rejects_asymmetric_adjacency(self):
        with self.assertRaises(GraphError):
            Graph(2, ((1,), ()))

    def test_vertex_limit(self):
        with self.assertRaises(SizeLimitError):
            Graph.empty(10_000)

    def test_from_masks_drops_diagonal(self):
        g = Graph.from_masks([0b011, 0b001, 0b000])
        self.assertEqual(g.edges, ((0, 1),))


class ComponentsTestCase(SimpleTestCase):

    def test_path_is_one_component(self):
        self.assertEqual(components(path(3)), [frozenset({0, 1, 2})])

    def test_edgeless_singletons(self):
        self.assertEqual(
            components(Graph.empty(3)),
            [frozenset({0}), frozenset({1}), frozenset({2})])

    def test_g7_minus_antipodal_pair(self):
        g7 = family('g7')
        rest, vmap = induced(g7, [v for v in range(7) if v not in (0, 3)])
        back = {new: old for old, new in vmap.items()}
        found = [frozenset(back[v] for v in comp) for comp in components(rest)]
        self.assertEqual(
            found, [frozenset({1, 2}), frozenset({4, 5}), frozenset({6})])

    @given(graphs(max_n=9))
    def test_components_partition(self, g):
        parts = components(g)
        self.assertEqual(sorted(v for p in parts for v in p), list(range(g.n)))
        for p in parts:
            self.assertTrue(is_connected_set(g, p))
        self.assertEqual([min(p) for p in parts], sorted(min(p) for p in parts))

    def test_mask_components_order(self):
        g = Graph.from_edges(5, [(3, 4), (0, 2)])
        parts = mask_components(g.masks, g.vertex_mask)
        self.assertEqual([to_list(p) for p in parts], [[0, 2], [1], [3, 4]])


class ContractTestCase(SimpleTestCase):

    def test_path_in_six_cycle(self):
        c6 = cycle(6)
        small, vmap = contract(c6, [{0, 1, 2}])
        self.assertEqual(small.n, 4)
        self.assertEqual(canonical_key(small), canonical_key(cycle(4)))
        self.assertEqual(vmap[0], vmap[1])
        self.assertEqual(vmap[1], vmap[2])

    def test_singleton_part_is_identity(self):
        g = cycle(5)
        small, vmap = contract(g, [{3}])
        self.assertEqual(small, g)
        self.assertEqual(vmap, {v: v for v in range(5)})

    def test_triangle_edge_collapses(self):
        small, _ = contract(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), [{0, 1}])
        self.assertEqual(small.edges, ((0, 1),))

    def test_rejects_disconnected_and_overlapping(self):
        g = path(4)
        with self.assertRaises(GraphError):
            contract(g, [{0, 2}])
        with self.assertRaises(GraphError):
            contract(g, [{0, 1}, {1, 2}])

    @given(graphs(min_n=3, max_n=8), st.data())
    def test_unmerged_adjacency_survives(self, g, data):
        start = data.draw(st.integers(min_value=0, max_value=g.n - 1))
        part = {start} | set(g.neighbors(start)[:1])
        small, vmap = contract(g, [part])
        for u, v in itertools.combinations(range(g.n), 2):
            if u in part or v in part:
                continue
            self.assertEqual(g.has_edge(u, v), small.has_edge(vmap[u], vmap[v]))


class StructureTestCase(SimpleTestCase):

    def test_girth_and_bipartite(self):
        petersen = family('petersen')
        self.assertEqual(girth(petersen), 5)
        self.assertFalse(is_bipartite(petersen))
        self.assertIsNone(girth(path(5)))
        self.assertTrue(is_bipartite(cycle(6)))
        self.assertFalse(has_triangle(cycle(4)))
        self.assertTrue(has_triangle(family('hourglass')))

    def test_complement_of_c5_is_c5(self):
        self.assertEqual(canonical_key(complement(cycle(5))), canonical_key(cycle(5)))

    def test_cycle_rank(self):
        self.assertEqual(cycle_rank(family('hourglass')), 2)
        self.assertEqual(cycle_rank(path(4)), 0)

    def test_shortest_path_prefers_low_indices(self):
        g = cycle(4)
        self.assertEqual(shortest_path(g, 0, 2, g.vertex_mask), [0, 1, 2])
        self.assertIsNone(shortest_path(g, 0, 2, mask_of([0, 2])))

    @given(graphs(max_n=8))
    def test_girth_matches_networkx(self, g):
        expected = nx.girth(to_nx(g)) if g.n else float('inf')
        found = girth(g)
        self.assertEqual(found if found is not None else float('inf'), expected)


class CanonicalKeyTestCase(SimpleTestCase):

    def test_c4_relabelings_agree(self):
        key = canonical_key(cycle(4))
        for perm in itertools.permutations(range(4)):
            self.assertEqual(canonical_key(relabel(cycle(4), perm)), key)

    def test_c4_differs_from_p4(self):
        self.assertNotEqual(canonical_key(cycle(4)), canonical_key(path(4)))

    def test_eleven_classes_on_four_vertices(self):
        pairs = list(itertools.combinations(range(4), 2))
        keys = set()
        for chosen in itertools.product((0, 1), repeat=len(pairs)):
            edges = [p for p, keep in zip(pairs, chosen) if keep]
            keys.add(canonical_key(Graph.from_edges(4, edges)))
        self.assertEqual(len(keys), 11)

    def test_size_limit(self):
        with self.assertRaises(SizeLimitError):
            canonical_key(Graph.empty(11))

    def test_petersen_against_its_relabeling(self):
        petersen = family('petersen')
        perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4]
        self.assertEqual(canonical_key(petersen), canonical_key(relabel(petersen, perm)))

    @hsettings(max_examples=300)
    @given(graphs(max_n=7), st.data())
    def test_permutation_invariance(self, g, data):
        perm = data.draw(st.permutations(list(range(g.n))))
        self.assertEqual(canonical_key(g), canonical_key(relabel(g, perm)))

    @hsettings(max_examples=150)
    @given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
    def test_equal_keys_iff_isomorphic(self, a, b):
        same = canonical_key(a) == canonical_key(b)
        self.assertEqual(same, nx.is_isomorphic(to_nx(a), to_nx(b)))


class CodecTestCase(SimpleTestCase):

    def test_star_example(self):
        g = from_graph6('D?{')
        self.assertEqual(g.n, 5)
        self.assertEqual(g.edges, ((0, 4), (1, 4), (2, 4), (3, 4)))
        self.assertEqual(to_graph6(g), 'D?{')

    def test_empty_graph(self):
        self.assertEqual(to_graph6(Graph.empty(0)), '?')
        self.assertEqual(from_graph6('?'), Graph.empty(0))
        self.assertEqual(from_json('{"n": 0, "edges": []}'), Graph.empty(0))

    def test_header_and_newline(self):
        self.assertEqual(from_graph6('>>graph6<<D?{\n'), from_graph6('D?{'))
        self.assertTrue(to_graph6(cycle(5), header=True).startswith('>>graph6<<'))

    def test_large_size_prefix(self):
        g = Graph.from_edges(70, [(0, 69)])
        text = to_graph6(g)
        self.assertTrue(text.startswith('~'))
        self.assertEqual(from_graph6(text), g)

    @given(graphs(min_n=1, max_n=12))
    def test_matches_networkx_encoder(self, g):
        reference = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        self.assertEqual(to_graph6(g), reference)
        self.assertEqual(from_graph6(reference), g)

    def test_graph6_errors_name_offset(self):
        with self.assertRaises(DocumentParseError) as ctx:
            from_graph6('D?')
        self.assertEqual(ctx.exception.offset, 2)
        with self.assertRaises(DocumentParseError) as ctx:
            from_graph6('D? ')
        self.assertEqual(ctx.exception.offset, 2)
        with self.assertRaises(DocumentParseError) as ctx:
            from_graph6('D?{?')
        self.assertEqual(ctx.exception.offset, 3)
        with self.assertRaises(DocumentParseError) as ctx:
            from_graph6('B@')
        self.assertIn('padding', str(ctx.exception))

    def test_duplicate_edge_json(self):
        with self.assertRaises(DocumentParseError) as ctx:
            from_json('{"n": 2, "edges": [[0, 1], [1, 0]]}')
        self.assertEqual(ctx.exception.path, 'edges[1]')
        self.assertIn('duplicate edge', str(ctx.exception))

    def test_json_order_and_range(self):
        with self.assertRaises(DocumentParseError) as ctx:
            from_json('{"n": 3, "edges": [[2, 1]]}')
        self.assertIn('u < v', str(ctx.exception))
        with self.assertRaises(DocumentParseError) as ctx:
            from_json('{"n": 3, "edges": [[0, 3]]}')
        self.assertEqual(ctx.exception.path, 'edges[0]')

    def test_json_syntax_offset(self):
        with self.assertRaises(DocumentParseError) as ctx:
            from_json('{"n": 3, "edges": [}')
        self.assertEqual(ctx.exception.offset, 19)

    def test_missing_field(self):
        with self.assertRaises(DocumentParseError) as ctx:
            from_json('{"edges": []}')
        self.assertEqual(ctx.exception.path, 'n')

    @given(graphs(max_n=10))
    def test_json_round_trip(self, g):
        self.assertEqual(from_json(to_json(g)), g)
        self.assertEqual(read_graph(to_json(g)), g)
        self.assertEqual(read_graph(to_graph6(g) + '\n'), g)

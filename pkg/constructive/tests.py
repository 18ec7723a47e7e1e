from django.test import SimpleTestCase

from certificates.models import SAT, Budget, TargetPattern
from certificates.solver import solve
from certificates.verifier import verify
from generators.enumeration import enumerate_upto
from generators.families import family
from generators.models import PathSystemSpec
from generators.path_systems import random_path_system
from graphs.models import Graph
from kempe.chains import h_graph
from kempe.models import AddTransversalEdge, ColoredInstance
from kempe.transforms import transform_instance
from utils.base.exceptions import PatternError, SizeLimitError, WitnessError
from zmodel.doubling import z_of

from .corollary import connected_transversal_certificate
from .cycles import cycle_certificate, unicyclic_certificate
from .matching import (certificate_from_matching, find_good_matching,
                       find_matchable_anticlique, is_good_matching)
from .models import (CUT_VERTEX, GOOD_MATCHING, RUNGS, SECTION_THREE,
                     SPANNING_FIVE_CYCLE, WHEEL, MatchingWitness)
from .serializers import (GoodMatchingSerializer, MatchingWitnessSerializer,
                          StrategyReportSerializer)
from .zsmall import z_small_certificate

SMALL = Budget(10 ** 6, 60.0)


def full_pattern(inst):
    return TargetPattern.full(h_graph(inst))


def fan_instance():
    """
    Path 0-1-2 of roots plus vertex 3 in class 0 hanging off 1, so
    removing the root of class 1 splits classes 0 and 1
    """
    g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    return ColoredInstance.build(g, [[0, 3], [1], [2]], [0, 1, 2])


class MatchableAnticliqueTestCase(SimpleTestCase):

    def test_star_matches_center_to_a_leaf(self):
        z = z_of(family('complete_bipartite', 1, 4))
        pat = full_pattern(z.inst)
        witness = find_matchable_anticlique(z.inst, pat)
        self.assertEqual(witness.anticlique, frozenset({1, 2, 3, 4}))
        self.assertEqual(witness.matching, ((0, 1),))
        self.assertEqual(witness.partner, {0: 1})
        cert = certificate_from_matching(z.inst, witness)
        self.assertEqual(cert.bags[0], frozenset({0, 1, 3}))
        self.assertEqual(cert.bags[4], frozenset({4}))
        self.assertEqual(verify(z.inst, pat, cert), [])

    def test_five_cycle_has_none(self):
        z = z_of(family('cycle', 5))
        self.assertIsNone(find_matchable_anticlique(z.inst, full_pattern(z.inst)))

    def test_edgeless_pattern(self):
        inst = ColoredInstance.singletons(Graph.empty(3))
        witness = find_matchable_anticlique(inst, TargetPattern.build(3, []))
        self.assertEqual(witness.anticlique, frozenset({0, 1, 2}))
        self.assertEqual(witness.matching, ())

    def test_bags_follow_the_pair_rule(self):
        inst = fan_instance()
        pat = TargetPattern.build(3, [(0, 1), (1, 2)])
        witness = find_matchable_anticlique(inst, pat)
        self.assertEqual((witness.anticlique, witness.matching), (frozenset({0, 2}), ((1, 0),)))
        cert = certificate_from_matching(inst, witness)
        self.assertEqual(cert.class_bags(inst), (frozenset({0}), frozenset({1, 3}), frozenset({2})))
        self.assertEqual(verify(inst, pat, cert), [])

    def test_invalid_witnesses_name_the_pair(self):
        inst = fan_instance()
        pat = TargetPattern.build(3, [(0, 1), (1, 2)])
        cases = [
            (frozenset({1}), ((0, 1),), (0, 1)),
            (frozenset({0, 2}), ((0, 1),), (0, 1)),
            (frozenset({0, 1}), (), (0, 1)),
        ]
        for anticlique, matching, pair in cases:
            with self.assertRaises(WitnessError) as caught:
                certificate_from_matching(inst, MatchingWitness(pat, anticlique, matching))
            self.assertEqual(caught.exception.pair, pair)

    def test_unmatched_vertex(self):
        inst = fan_instance()
        pat = TargetPattern.build(3, [(0, 1), (1, 2)])
        with self.assertRaises(WitnessError) as caught:
            certificate_from_matching(inst, MatchingWitness(pat, frozenset({0, 2}), ()))
        self.assertIsNone(caught.exception.pair)

    def test_witnesses_on_small_doubled_graphs(self):
        found = 0
        for g in enumerate_upto(6):
            z = z_of(g)
            pat = full_pattern(z.inst)
            witness = find_matchable_anticlique(z.inst, pat)
            if witness is None:
                continue
            found += 1
            self.assertGreaterEqual(len(witness.anticlique), g.n - len(witness.anticlique))
            cert = certificate_from_matching(z.inst, witness)
            self.assertEqual(verify(z.inst, pat, cert), [])
            # anticlique classes keep (t, 1), a matched s takes both copies of s and (t, 2)
            expected = [frozenset({2 * x}) for x in range(g.n)]
            for s, t in witness.matching:
                expected[s] = frozenset({2 * s, 2 * s + 1, 2 * t + 1})
            self.assertEqual(cert.class_bags(z.inst), tuple(expected), g.edges)
        self.assertGreater(found, 0)

    def test_serializer(self):
        z = z_of(family('complete_bipartite', 1, 4))
        witness = find_matchable_anticlique(z.inst, full_pattern(z.inst))
        data = MatchingWitnessSerializer(witness).data
        self.assertEqual(data['anticlique'], [1, 2, 3, 4])
        self.assertEqual(data['matching'], [[0, 1]])
        self.assertEqual(data['pattern']['k'], 5)


class GoodMatchingTestCase(SimpleTestCase):

    def test_prism_takes_the_rungs(self):
        matching = find_good_matching(TargetPattern.from_graph(family('prism')))
        self.assertEqual(matching.edges, ((0, 3), (1, 4), (2, 5)))

    def test_six_cycle_with_long_chords(self):
        g = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3), (1, 4), (2, 5)])
        matching = find_good_matching(TargetPattern.from_graph(g))
        self.assertEqual(matching.edges, ((0, 3), (1, 4), (2, 5)))
        self.assertTrue(is_good_matching(g, matching.edges))

    def test_bare_six_cycle_has_none(self):
        self.assertIsNone(find_good_matching(TargetPattern.from_graph(family('cycle', 6))))
        self.assertFalse(is_good_matching(family('cycle', 6), ((0, 1), (2, 3), (4, 5))))

    def test_needs_six_vertices(self):
        with self.assertRaises(PatternError):
            find_good_matching(TargetPattern.from_graph(family('cycle', 5)))

    def test_serializer(self):
        matching = find_good_matching(TargetPattern.from_graph(family('prism')))
        self.assertEqual(GoodMatchingSerializer(matching).data['edges'], [[0, 3], [1, 4], [2, 5]])


class CycleCertificateTestCase(SimpleTestCase):

    def test_seeded_rings(self):
        for seed in range(200):
            n = 3 + seed % 4
            inst = random_path_system(PathSystemSpec(
                family('cycle', n), seed=seed, max_internal=4, extra_edge_prob=0.2))
            cert = cycle_certificate(inst, range(n))
            pat = TargetPattern.from_graph(family('cycle', n))
            self.assertEqual(verify(inst, pat, cert), [], seed)
            self.assertEqual(solve(inst, pat, SMALL).status, SAT, seed)

    def test_doubled_five_cycle(self):
        z = z_of(family('cycle', 5))
        cert = cycle_certificate(z.inst, [0, 1, 2, 3, 4])
        self.assertEqual(verify(z.inst, full_pattern(z.inst), cert), [])

    def test_ring_through_some_classes(self):
        for seed in range(20):
            inst = random_path_system(PathSystemSpec(family('c5plus'), seed=seed, max_internal=4))
            cert = cycle_certificate(inst, [0, 1, 2])
            pat = TargetPattern.build(5, [(0, 1), (1, 2), (0, 2)])
            self.assertEqual(verify(inst, pat, cert), [], seed)
            self.assertEqual(cert.bags[inst.reps[4]], frozenset({inst.reps[4]}))

    def test_ring_errors(self):
        inst = random_path_system(PathSystemSpec(family('path', 4), seed=1))
        with self.assertRaises(PatternError):
            cycle_certificate(inst, [0, 1])
        with self.assertRaises(PatternError):
            cycle_certificate(inst, [0, 1, 1])
        with self.assertRaises(PatternError):
            cycle_certificate(inst, [0, 1, 9])
        with self.assertRaises(PatternError):
            cycle_certificate(inst, [0, 1, 2, 3])


class UnicyclicCertificateTestCase(SimpleTestCase):

    def patterns(self):
        yield family('path', 5)
        yield family('complete_bipartite', 1, 3)
        yield family('cycle', 4)
        yield Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        yield Graph.from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 2)])

    def test_seeded_instances(self):
        patterns = list(self.patterns())
        for seed in range(200):
            pattern = patterns[seed % len(patterns)]
            inst = random_path_system(PathSystemSpec(
                pattern, seed=seed, max_internal=4, extra_edge_prob=0.2))
            pat = TargetPattern.from_graph(pattern)
            cert = unicyclic_certificate(inst, pat)
            self.assertEqual(verify(inst, pat, cert), [], (pattern.edges, seed))
            self.assertEqual(solve(inst, pat, SMALL).status, SAT, (pattern.edges, seed))

    def test_isolated_classes_keep_their_root(self):
        pattern = Graph.from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 2)])
        inst = random_path_system(PathSystemSpec(pattern, seed=7, max_internal=2))
        cert = unicyclic_certificate(inst, TargetPattern.from_graph(pattern))
        self.assertEqual(cert.bags[inst.reps[5]], frozenset({inst.reps[5]}))

    def test_hourglass_is_rejected(self):
        inst = random_path_system(PathSystemSpec(family('hourglass'), seed=0))
        with self.assertRaises(PatternError):
            unicyclic_certificate(inst, TargetPattern.from_graph(family('hourglass')))

    def test_pattern_must_fit(self):
        inst = random_path_system(PathSystemSpec(family('path', 3), seed=0))
        with self.assertRaises(PatternError):
            unicyclic_certificate(inst, TargetPattern.build(3, [(0, 1), (1, 2), (0, 2)]))


class LadderTestCase(SimpleTestCase):

    def test_rungs_of_named_graphs(self):
        cases = {
            'k5': (family('complete', 5), SPANNING_FIVE_CYCLE),
            'prism': (family('prism'), GOOD_MATCHING),
            'wheel': (family('wheel', 5), WHEEL),
        }
        for name, (g, rung) in cases.items():
            report = z_small_certificate(z_of(g), SMALL)
            self.assertEqual(report.rung, rung, name)
            self.assertEqual(report.attempts, RUNGS[:RUNGS.index(rung)], name)

    def test_five_cycle_rotates_into_the_second_copy(self):
        z = z_of(family('cycle', 5))
        report = z_small_certificate(z, SMALL)
        self.assertEqual(report.rung, SPANNING_FIVE_CYCLE)
        self.assertEqual(report.attempts, ())
        # class i keeps (i, 1) and takes (i + 1, 2)
        self.assertEqual(report.certificate.class_bags(z.inst), (
            frozenset({0, 3}), frozenset({2, 5}), frozenset({4, 7}),
            frozenset({6, 9}), frozenset({8, 1})))
        self.assertEqual(verify(z.inst, full_pattern(z.inst), report.certificate), [])

    def test_triangle_takes_the_unicyclic_builder(self):
        report = z_small_certificate(z_of(family('cycle', 3)), SMALL)
        self.assertEqual((report.rung, report.attempts), (SECTION_THREE, (SPANNING_FIVE_CYCLE,)))

    def test_disconnected_base_recurses(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        report = z_small_certificate(z_of(g), SMALL)
        self.assertEqual(report.rung, CUT_VERTEX)
        self.assertEqual(len(report.steps), 2)
        self.assertTrue(report.path.startswith('cutvertex > '))

    def test_pendant_vertex(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
        z = z_of(g)
        report = z_small_certificate(z, SMALL)
        self.assertEqual(report.rung, CUT_VERTEX)
        bags = report.certificate.class_bags(z.inst)
        self.assertEqual((bags[3], bags[4]), (frozenset({6, 7, 9}), frozenset({8})))

    def test_every_small_doubled_graph(self):
        seen = set()
        for g in enumerate_upto(6):
            z = z_of(g)
            report = z_small_certificate(z, SMALL)
            self.assertEqual(verify(z.inst, full_pattern(z.inst), report.certificate), [], g.edges)
            self.assertIn(report.rung, RUNGS)
            seen.add(report.rung)
        self.assertTrue({SECTION_THREE, CUT_VERTEX, GOOD_MATCHING} <= seen)

    def test_size_limit(self):
        with self.assertRaises(SizeLimitError):
            z_small_certificate(z_of(family('g7')))

    def test_serializer(self):
        report = z_small_certificate(z_of(family('prism')), SMALL)
        data = StrategyReportSerializer(report).data
        self.assertEqual(data['rung'], GOOD_MATCHING)
        self.assertEqual(data['path'], GOOD_MATCHING)
        self.assertEqual(len(data['certificate']['bags']), 6)


class ConnectedTransversalTestCase(SimpleTestCase):

    def test_kempe_path_systems(self):
        for seed in range(10):
            inst = random_path_system(PathSystemSpec(
                family('cycle', 5), seed=seed, kempe_complete=True))
            for i in range(4):
                inst = transform_instance(inst, AddTransversalEdge(i, i + 1))
            cert = connected_transversal_certificate(inst, SMALL)
            self.assertEqual(verify(inst, full_pattern(inst), cert), [], seed)

    def test_complete_graph(self):
        inst = ColoredInstance.singletons(family('complete', 5))
        cert = connected_transversal_certificate(inst, SMALL)
        self.assertEqual(set(cert.sizes().values()), {1})

    def test_preconditions(self):
        with self.assertRaises(PatternError):
            connected_transversal_certificate(ColoredInstance.singletons(family('complete', 4)))
        with self.assertRaises(PatternError):
            # copy-one vertices of a doubled graph are pairwise non-adjacent
            connected_transversal_certificate(z_of(family('complete', 5)).inst)
        with self.assertRaises(PatternError):
            connected_transversal_certificate(ColoredInstance.singletons(family('cycle', 5)))

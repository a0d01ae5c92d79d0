import random
import time
import unittest

from hypothesis import given, settings

from LinkCommunity.Cost.IllegalToggle import IllegalToggle
from LinkCommunity.Cost.SubgraphState import SubgraphState
from LinkCommunity.Cost.Toggle import Toggle
from LinkCommunity.Cost.WeightedLink import weightedLinkPsi
from LinkCommunity.Parameter.Direction import Direction
from LinkCommunity.Parameter.SearchMode import SearchMode
from test.LinkCommunityTest import LinkCommunityTest, graphsWithLinkSets, randomConnectedGraph


class SubgraphStateTest(LinkCommunityTest):

    def state(self, *numbers) -> SubgraphState:
        return SubgraphState(self.bowtie, self.links(self.bowtie, *numbers))

    def test_Sigma(self):
        self.assertAlmostEqual(1.0, self.state(1, 2, 3).sigma())
        self.assertAlmostEqual(1.0, self.state(1).sigma())
        self.assertAlmostEqual(1.25, self.state(2).sigma())
        self.assertAlmostEqual(0.0, self.state().sigma())
        self.assertAlmostEqual(0.0, self.state(1, 2, 3, 4, 5, 6).sigma())

    def test_Tau(self):
        self.assertAlmostEqual(5.0, self.state(1, 2, 3).tau())
        self.assertEqual(12, self.state(1, 2, 3, 4, 5, 6).kIn())
        self.assertEqual(6, self.state(1, 2, 3).kIn())

    def test_Psi(self):
        self.assertAlmostEqual(1.0 / 3.0, self.state(1, 2, 3).psi(), places=12)
        self.assertAlmostEqual(0.6, self.state(1).psi(), places=12)
        self.assertAlmostEqual(0.75, self.state(2).psi(), places=12)
        self.assertAlmostEqual(0.46875, self.state(1, 2).psi(), places=12)
        self.assertAlmostEqual(0.84375, self.state(1, 4).psi(), places=12)
        self.assertAlmostEqual(2.0 / 3.0, self.state(1, 2, 4).psi(), places=12)
        self.assertAlmostEqual(1.0, self.state().psi())
        self.assertAlmostEqual(1.0, self.state(1, 2, 3, 4, 5, 6).psi())
        self.assertAlmostEqual(1.0, SubgraphState(self.singleEdge, self.singleEdge.fullSet()).psi())

    def test_Nodes(self):
        state = self.state(1, 2)
        a, b, c = self.bowtie.nodeId("a"), self.bowtie.nodeId("b"), self.bowtie.nodeId("c")
        self.assertEqual(sorted([a, b, c]), state.nodes())
        self.assertEqual(sorted([b, c]), state.boundaryNodes())
        self.assertEqual(2, state.internalDegree(a))
        self.assertEqual(3, state.externalDegree(c))
        self.assertEqual(1, state.externalDegree(b))
        self.assertFalse(state.isBoundary(a))
        self.assertTrue(state.isConnected())

    def test_DeltaPsiLink(self):
        state = self.state(1, 2)
        self.assertAlmostEqual(1.0 / 3.0 - 0.46875, state.deltaPsiLink(2, Direction.INCLUDE), places=12)
        self.assertAlmostEqual(0.46875, state.psi(), places=12)
        self.assertGreater(self.state(1, 2, 3).deltaPsiLink(3, Direction.INCLUDE), 0.0)
        self.assertRaises(IllegalToggle, state.deltaPsiLink, 0, Direction.INCLUDE)
        self.assertRaises(IllegalToggle, state.deltaPsiLink, 5, Direction.EXCLUDE)

    def test_DeltaPsiNode(self):
        state = self.state(1, 2, 3)
        d = self.bowtie.nodeId("d")
        self.assertEqual([3], state.nodeToggleLinks(d, Direction.INCLUDE))
        self.assertAlmostEqual(0.46875 - 1.0 / 3.0, state.deltaPsiNode(d, Direction.INCLUDE), places=12)
        self.assertEqual([4], state.nodeToggleLinks(self.bowtie.nodeId("e"), Direction.INCLUDE))
        self.assertRaises(IllegalToggle, self.state(1).deltaPsiNode, d, Direction.INCLUDE)
        self.assertRaises(IllegalToggle, state.deltaPsiNode, d, Direction.EXCLUDE)
        a = self.bowtie.nodeId("a")
        self.assertEqual([0, 1], state.nodeToggleLinks(a, Direction.EXCLUDE))
        self.assertAlmostEqual(0.75 - 1.0 / 3.0, state.deltaPsiNode(a, Direction.EXCLUDE), places=12)

    def test_ApplyToggle(self):
        state = self.state(1, 2, 3)
        toggled = state.applyToggle(Toggle(SearchMode.NODE_WISE, self.bowtie.nodeId("d"), Direction.INCLUDE))
        self.assertEqual([3], toggled)
        self.assertEqual(self.links(self.bowtie, 1, 2, 3, 4), state.getLinkSet())
        self.assertAlmostEqual(0.46875, state.psi(), places=12)
        self.assertEqual([3], state.applyToggle(Toggle(SearchMode.LINK_WISE, 3, Direction.EXCLUDE)))
        self.assertAlmostEqual(1.0 / 3.0, state.psi(), places=12)
        self.assertRaises(IllegalToggle, state.applyToggle, Toggle(SearchMode.LINK_WISE, 3, Direction.EXCLUDE))

    def test_Clone(self):
        state = self.state(1, 2)
        copy = state.clone()
        copy.toggleLink(2)
        self.assertEqual(self.links(self.bowtie, 1, 2), state.getLinkSet())
        self.assertAlmostEqual(0.46875, state.psi(), places=12)
        self.assertAlmostEqual(1.0 / 3.0, copy.psi(), places=12)

    def test_WeightedLink(self):
        self.assertAlmostEqual(0.6, weightedLinkPsi(1.0, 2.0, 2.0, 6), places=12)
        self.assertAlmostEqual(0.75, weightedLinkPsi(1.0, 2.0, 4.0, 6), places=12)
        self.assertAlmostEqual(1.0, weightedLinkPsi(1e-9, 2.0, 2.0, 6), places=6)

    @given(graphsWithLinkSets())
    @settings(deadline=None, max_examples=10000)
    def test_ConservationAndSymmetry(self, sample):
        graph, links = sample
        state = SubgraphState(graph, links)
        self.assertAlmostEqual(state.kIn(), state.sigma() + state.tau(), delta=1e-12)
        self.assertAlmostEqual(state.psi(), SubgraphState(graph, links.complement()).psi(), delta=1e-12)
        self.assertGreaterEqual(state.psi(), 0.0)
        self.assertEqual(sum(state.internalDegree(node) for node in range(graph.nodeCount())), state.kIn())

    @given(graphsWithLinkSets())
    @settings(deadline=None, max_examples=80)
    def test_DeltasMatchRecomputation(self, sample):
        graph, links = sample
        state = SubgraphState(graph, links)
        for link_id in range(graph.linkCount()):
            direction = Direction.EXCLUDE if links.contains(link_id) else Direction.INCLUDE
            after = links.copy()
            after.toggle(link_id)
            self.assertAlmostEqual(SubgraphState(graph, after).psi() - state.psi(),
                                   state.deltaPsiLink(link_id, direction), places=9)
        for node in range(graph.nodeCount()):
            for direction in (Direction.INCLUDE, Direction.EXCLUDE):
                toggled = state.nodeToggleLinks(node, direction)
                if len(toggled) == 0:
                    continue
                after = links.copy()
                for link_id in toggled:
                    after.toggle(link_id)
                self.assertAlmostEqual(SubgraphState(graph, after).psi() - state.psi(),
                                       state.deltaPsiNode(node, direction), places=9)

    def test_IncrementalFidelity(self):
        graph = randomConnectedGraph(1000, 5000, 17)
        generator = random.Random(3)
        state = SubgraphState(graph)
        for _ in range(10000):
            state.toggleLink(generator.randrange(graph.linkCount()))
        self.assertAlmostEqual(state.recomputeSigma(), state.sigma(), places=9)
        self.assertAlmostEqual(SubgraphState(graph, state.getLinkSet()).psi(), state.psi(), places=9)

    def test_IncrementalSpeed(self):
        graph = randomConnectedGraph(1000, 5000, 29)
        generator = random.Random(5)
        toggles = [generator.randrange(graph.linkCount()) for _ in range(2000)]
        state = SubgraphState(graph, graph.linkSet(range(0, graph.linkCount(), 2)))
        start = time.perf_counter()
        for link_id in toggles:
            state.toggleLink(link_id)
            state.psi()
        incremental = (time.perf_counter() - start) / len(toggles)
        links = state.getLinkSet().copy()
        start = time.perf_counter()
        for link_id in toggles[:100]:
            links.toggle(link_id)
            SubgraphState(graph, links).psi()
        naive = (time.perf_counter() - start) / 100
        self.assertGreaterEqual(naive / incremental, 50.0)


if __name__ == '__main__':
    unittest.main()

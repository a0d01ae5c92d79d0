import os
import tempfile
import unittest

import networkx as nx
from hypothesis import given, settings

from LinkCommunity.Graph.DisconnectedGraph import DisconnectedGraph
from LinkCommunity.Graph.DuplicateEdge import DuplicateEdge
from LinkCommunity.Graph.EmptyInput import EmptyInput
from LinkCommunity.Graph.EmptySet import EmptySet
from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Graph.MalformedLine import MalformedLine
from LinkCommunity.Graph.SelfLoop import SelfLoop
from test.LinkCommunityTest import LinkCommunityTest, graphFile, graphsWithLinkSets


class GraphTest(LinkCommunityTest):

    def test_Bowtie(self):
        self.assertEqual(5, self.bowtie.nodeCount())
        self.assertEqual(6, self.bowtie.linkCount())
        self.assertEqual(4, self.bowtie.degree(self.bowtie.nodeId("c")))
        for label in ["a", "b", "d", "e"]:
            self.assertEqual(2, self.bowtie.degree(self.bowtie.nodeId(label)))
        self.assertEqual(("c", "d"), self.bowtie.linkLabels(3))
        self.assertEqual("a", self.bowtie.getLabel(0))
        self.assertEqual(2, self.singleEdge.nodeCount())
        self.assertEqual(1, self.singleEdge.linkCount())

    def test_InvalidInput(self):
        self.assertRaises(DisconnectedGraph, Graph, [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e")])
        self.assertRaises(SelfLoop, Graph, [("a", "b"), ("b", "b")])
        self.assertRaises(DuplicateEdge, Graph, [("a", "b"), ("b", "a")])
        self.assertRaises(EmptyInput, Graph, [])
        self.assertRaises(MalformedLine, Graph, [("a", "b", "c")])

    def test_EdgeListFile(self):
        with tempfile.TemporaryDirectory() as directory:
            file_name = os.path.join(directory, "broken.txt")
            output_file = open(file_name, mode='w', encoding='utf-8')
            output_file.write("# comment\n\na b\nb c d\n")
            output_file.close()
            self.assertRaises(MalformedLine, Graph.loadGraph, file_name)
            self.assertRaises(OSError, Graph.loadGraph, os.path.join(directory, "missing.txt"))

    def test_Fingerprint(self):
        self.assertEqual(self.bowtie.fingerprint(), Graph.loadGraph(graphFile("bowtie.txt")).fingerprint())
        self.assertNotEqual(self.bowtie.fingerprint(), self.twoTriangles.fingerprint())

    def test_IsConnected(self):
        self.assertTrue(self.bowtie.isConnected(self.links(self.bowtie, 1, 2, 3)))
        self.assertFalse(self.bowtie.isConnected(self.links(self.bowtie, 1, 4)))
        self.assertTrue(self.bowtie.isConnected(self.links(self.bowtie, 4)))
        self.assertFalse(self.bowtie.isConnected(self.bowtie.emptySet()))

    def test_Components(self):
        self.assertEqual([self.links(self.bowtie, 1), self.links(self.bowtie, 4)],
                         self.bowtie.components(self.links(self.bowtie, 1, 4)))
        self.assertEqual([self.links(self.bowtie, 1, 2, 3)], self.bowtie.components(self.links(self.bowtie, 1, 2, 3)))
        self.assertEqual([self.links(self.bowtie, 1, 2, 3), self.links(self.bowtie, 6)],
                         self.bowtie.components(self.links(self.bowtie, 1, 2, 3, 6)))
        self.assertEqual([], self.bowtie.components(self.bowtie.emptySet()))

    def test_LinkSubgraph(self):
        subgraph = self.bowtie.linkSubgraph(self.links(self.bowtie, 2, 4))
        self.assertEqual({self.bowtie.nodeId(label) for label in "acd"}, set(subgraph.nodes))
        self.assertEqual([1, 3], sorted(link_id for _, _, link_id in subgraph.edges(data="link")))
        self.assertEqual(0, self.bowtie.linkSubgraph(self.bowtie.emptySet()).number_of_nodes())

    def test_MainComponent(self):
        self.assertEqual(self.links(self.bowtie, 1, 2, 3), self.bowtie.mainComponent(self.links(self.bowtie, 1, 2, 3, 6)))
        self.assertEqual(self.links(self.bowtie, 4, 5), self.bowtie.mainComponent(self.links(self.bowtie, 1, 4, 5)))
        self.assertRaises(EmptySet, self.bowtie.mainComponent, self.bowtie.emptySet())

    def test_NodesOf(self):
        self.assertEqual({self.bowtie.nodeId(label) for label in "abc"},
                         self.bowtie.nodesOf(self.links(self.bowtie, 1, 2)))

    @given(graphsWithLinkSets())
    @settings(deadline=None, max_examples=60)
    def test_ComponentsAgreeWithNetworkx(self, sample):
        graph, links = sample
        reference = nx.Graph()
        reference.add_edges_from(graph.getLink(link_id) for link_id in links)
        components = graph.components(links)
        self.assertEqual(nx.number_connected_components(reference), len(components))
        self.assertEqual(not links.isEmpty() and nx.is_connected(reference), graph.isConnected(links))
        expected = sorted(len(component) for component in nx.connected_components(reference))
        self.assertEqual(expected, sorted(len(graph.nodesOf(component)) for component in components))
        union = graph.emptySet()
        for component in components:
            self.assertTrue(graph.isConnected(component))
            self.assertTrue(union.intersection(component).isEmpty())
            union = union.union(component)
        self.assertEqual(links, union)


if __name__ == '__main__':
    unittest.main()

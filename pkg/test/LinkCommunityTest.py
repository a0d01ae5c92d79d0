import os
import random
import unittest

from hypothesis import strategies as st

from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Graph.LinkSet import LinkSet

GRAPHS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "graphs")


def graphFile(name: str) -> str:
    return os.path.join(GRAPHS, name)


@st.composite
def connectedEdgeLists(draw, maxNodes: int = 8, maxLinks: int = 16, minNodes: int = 2, minLinks: int = 1) -> list:
    """
    Random connected simple graph: a random spanning tree plus random extra links.
    """
    node_count = draw(st.integers(min_value=minNodes, max_value=maxNodes))
    edges = []
    for node in range(1, node_count):
        edges.append((draw(st.integers(min_value=0, max_value=node - 1)), node))
    present = set(edges)
    pairs = [(i, j) for i in range(node_count) for j in range(i + 1, node_count) if (i, j) not in present]
    room = min(len(pairs), maxLinks - len(edges))
    if room > 0:
        least = min(room, max(0, minLinks - len(edges)))
        edges.extend(draw(st.lists(st.sampled_from(pairs), unique=True, min_size=least, max_size=room)))
    return [("n" + str(i), "n" + str(j)) for i, j in edges]


@st.composite
def graphsWithLinkSets(draw, maxNodes: int = 8, maxLinks: int = 16) -> tuple:
    graph = Graph(draw(connectedEdgeLists(maxNodes, maxLinks)))
    bits = draw(st.integers(min_value=0, max_value=(1 << graph.linkCount()) - 1))
    return graph, LinkSet(graph.linkCount(), bits=bits)


def randomConnectedGraph(nodeCount: int, linkCount: int, seed: int) -> Graph:
    generator = random.Random(seed)
    edges = set()
    for node in range(1, nodeCount):
        edges.add((generator.randrange(node), node))
    while len(edges) < linkCount:
        i = generator.randrange(nodeCount)
        j = generator.randrange(nodeCount)
        if i != j and (i, j) not in edges and (j, i) not in edges:
            edges.add((i, j))
    return Graph(sorted(edges))


class LinkCommunityTest(unittest.TestCase):

    bowtie: Graph
    singleEdge: Graph
    twoTriangles: Graph

    def setUp(self) -> None:
        self.bowtie = Graph.loadGraph(graphFile("bowtie.txt"))
        self.singleEdge = Graph.loadGraph(graphFile("singleedge.txt"))
        self.twoTriangles = Graph.loadGraph(graphFile("twotriangles.txt"))

    def links(self, graph: Graph, *numbers) -> LinkSet:
        """
        Link set given by 1-based link numbers, as links are numbered in the graph files.
        """
        return graph.linkSet([number - 1 for number in numbers])

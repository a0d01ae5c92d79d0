from __future__ import annotations

import hashlib

import networkx as nx

from LinkCommunity.Graph.DisconnectedGraph import DisconnectedGraph
from LinkCommunity.Graph.DuplicateEdge import DuplicateEdge
from LinkCommunity.Graph.EmptyInput import EmptyInput
from LinkCommunity.Graph.EmptySet import EmptySet
from LinkCommunity.Graph.LinkSet import LinkSet
from LinkCommunity.Graph.MalformedLine import MalformedLine
from LinkCommunity.Graph.SelfLoop import SelfLoop


class Graph(object):

    __node_count: int
    __link_count: int
    __links: list
    __adjacency: list
    __degree: list
    __labels: list
    __label_index: dict
    __network: nx.Graph

    def constructor1(self, edgeList: list):
        """
        Builds the graph from a sequence of node label pairs. Node and link ids are dense and 0-based, assigned in
        first-seen input order.

        PARAMETERS
        ----------
        edgeList : list
            Pairs of node labels, one pair per link.
        """
        self.__links = []
        self.__adjacency = []
        self.__labels = []
        self.__label_index = {}
        seen = set()
        for edge in edgeList:
            if len(edge) != 2:
                raise MalformedLine("An edge needs exactly two node labels, got " + str(edge))
            first, second = edge
            if first == second:
                raise SelfLoop("Self-loop at node " + str(first))
            i = self.__nodeFor(first)
            j = self.__nodeFor(second)
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DuplicateEdge("Duplicate edge " + str(first) + " " + str(second))
            seen.add(key)
            link_id = len(self.__links)
            self.__links.append((i, j))
            self.__adjacency[i].append((j, link_id))
            self.__adjacency[j].append((i, link_id))
        if len(self.__links) == 0:
            raise EmptyInput("The edge list contains no edge")
        self.__node_count = len(self.__labels)
        self.__link_count = len(self.__links)
        self.__degree = [len(neighbors) for neighbors in self.__adjacency]
        self.__network = nx.Graph()
        self.__network.add_nodes_from(range(self.__node_count))
        for link_id, (i, j) in enumerate(self.__links):
            self.__network.add_edge(i, j, link=link_id)
        if not nx.is_connected(self.__network):
            raise DisconnectedGraph("The graph is not connected")

    def constructor2(self, fileName: str):
        """
        Loads the graph from an edge-list file, one edge per line given by two whitespace separated node labels.
        Blank lines and lines starting with # are ignored.

        PARAMETERS
        ----------
        fileName : str
            Name of the edge-list file.
        """
        edges = []
        input_file = open(fileName, mode='r', encoding='utf-8')
        lines = input_file.readlines()
        input_file.close()
        for line_number, line in enumerate(lines, start=1):
            line = line.strip()
            if len(line) == 0 or line.startswith("#"):
                continue
            items = line.split()
            if len(items) != 2:
                raise MalformedLine("Line " + str(line_number) + " does not hold exactly two node labels")
            edges.append((items[0], items[1]))
        self.constructor1(edges)

    def __init__(self, edges: object = None):
        if isinstance(edges, str):
            self.constructor2(edges)
        elif edges is not None:
            self.constructor1(edges)
        else:
            raise EmptyInput("A graph needs an edge list or an edge-list file")

    @staticmethod
    def loadGraph(fileName: str) -> Graph:
        return Graph(fileName)

    def __nodeFor(self, label) -> int:
        if label not in self.__label_index:
            self.__label_index[label] = len(self.__labels)
            self.__labels.append(label)
            self.__adjacency.append([])
        return self.__label_index[label]

    def nodeCount(self) -> int:
        return self.__node_count

    def linkCount(self) -> int:
        return self.__link_count

    def getLink(self, linkId: int) -> tuple:
        """
        Returns the two end nodes of a link.
        """
        return self.__links[linkId]

    def getAdjacency(self, node: int) -> list:
        """
        Returns the (neighbor node, link id) pairs of a node.
        """
        return self.__adjacency[node]

    def degree(self, node: int) -> int:
        return self.__degree[node]

    def getLabel(self, node: int):
        return self.__labels[node]

    def nodeId(self, label) -> int:
        return self.__label_index[label]

    def linkLabels(self, linkId: int) -> tuple:
        """
        Returns the original labels of the end nodes of a link, in input order.
        """
        i, j = self.__links[linkId]
        return self.__labels[i], self.__labels[j]

    def fullSet(self) -> LinkSet:
        return LinkSet.full(self.__link_count)

    def emptySet(self) -> LinkSet:
        return LinkSet(self.__link_count)

    def linkSet(self, links) -> LinkSet:
        return LinkSet(self.__link_count, links)

    def fingerprint(self) -> str:
        """
        Returns a digest of the labelled edge list, identical for identical input files.

        RETURNS
        -------
        str
            Hexadecimal sha256 digest.
        """
        digest = hashlib.sha256()
        for link_id in range(self.__link_count):
            first, second = self.linkLabels(link_id)
            digest.update((str(first) + "\t" + str(second) + "\n").encode("utf-8"))
        return digest.hexdigest()

    def nodesOf(self, linkSet: LinkSet) -> set:
        """
        Returns C(L), the nodes attached to the links of the set.
        """
        result = set()
        for link_id in linkSet:
            result.update(self.__links[link_id])
        return result

    def linkSubgraph(self, linkSet: LinkSet) -> nx.Graph:
        """
        Returns a read-only view of the subgraph induced by the links of the set. Its edges carry the link id in the
        "link" attribute.
        """
        return self.__network.edge_subgraph(self.__links[link_id] for link_id in linkSet)

    def isConnected(self, linkSet: LinkSet) -> bool:
        """
        Checks whether the subgraph induced by the links of the set is connected. The empty set is not connected,
        since a community is a nonempty connected subgraph.

        PARAMETERS
        ----------
        linkSet : LinkSet
            Links inducing the subgraph.

        RETURNS
        -------
        bool
            True, if the link-induced subgraph is connected.
        """
        if linkSet.isEmpty():
            return False
        return nx.is_connected(self.linkSubgraph(linkSet))

    def components(self, linkSet: LinkSet) -> list:
        """
        Partitions the links of the set into the link sets of the connected components of the induced subgraph.
        Components are sorted by descending size, equal sizes by their smallest link id.

        PARAMETERS
        ----------
        linkSet : LinkSet
            Links inducing the subgraph.

        RETURNS
        -------
        list
            Components as LinkSets, largest first.
        """
        subgraph = self.linkSubgraph(linkSet)
        result = []
        for nodes in nx.connected_components(subgraph):
            links = [link_id for _, _, link_id in subgraph.subgraph(nodes).edges(data="link")]
            result.append(LinkSet(self.__link_count, links))
        result.sort(key=lambda component: (-component.cardinality(), component.smallestLink()))
        return result

    def mainComponent(self, linkSet: LinkSet) -> LinkSet:
        """
        Returns the largest component of the subgraph induced by the set.

        PARAMETERS
        ----------
        linkSet : LinkSet
            Nonempty link set.

        RETURNS
        -------
        LinkSet
            First component in the order of components.
        """
        if linkSet.isEmpty():
            raise EmptySet("The empty link set has no main component")
        return self.components(linkSet)[0]

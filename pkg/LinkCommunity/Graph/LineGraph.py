import math

from Math.Matrix import Matrix

from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Graph.LinkSet import LinkSet


class LineGraph(object):

    __graph: Graph
    __size: int
    __weights: Matrix
    __neighbors: list
    __node_weights: list

    def __init__(self, graph: Graph):
        """
        Builds the weighted line graph of a graph. Every link of the graph becomes a vertex, and two links sharing
        node i are joined by an edge of weight 1/k_i. The diagonal entry of link (i, j) is 1/k_i + 1/k_j. The line
        graph is only used to cross-check the connectivity measures computed on the graph itself.

        PARAMETERS
        ----------
        graph : Graph
            Graph whose links become the vertices of the line graph.
        """
        self.__graph = graph
        self.__size = graph.linkCount()
        self.__node_weights = [1.0 / graph.degree(node) for node in range(graph.nodeCount())]
        self.__weights = Matrix(self.__size, self.__size)
        self.__neighbors = [[] for _ in range(self.__size)]
        for node in range(graph.nodeCount()):
            weight = self.__node_weights[node]
            incident = [link_id for neighbor, link_id in graph.getAdjacency(node)]
            for k in incident:
                self.__weights.addValue(k, k, weight)
                for l in incident:
                    if k != l:
                        self.__weights.addValue(k, l, weight)
                        self.__neighbors[k].append((l, weight))

    def size(self) -> int:
        return self.__size

    def getWeight(self, k: int, l: int) -> float:
        """
        Returns E_kl, the weight between links k and l, the diagonal included.
        """
        return self.__weights.getValue(k, l)

    def getNodeWeight(self, node: int) -> float:
        return self.__node_weights[node]

    def cut(self, linkSet: LinkSet) -> float:
        """
        Sums the weights of line graph edges leaving the link set. This is the node cut sigma of the link-induced
        subgraph.

        PARAMETERS
        ----------
        linkSet : LinkSet
            Vertices of the line graph on one side of the cut.

        RETURNS
        -------
        float
            Sum of E_kl over k in the set and l outside it.
        """
        result = 0.0
        for k in linkSet:
            for l, weight in self.__neighbors[k]:
                if not linkSet.contains(l):
                    result += weight
        return result

    def quadraticForm(self, linkSet: LinkSet) -> float:
        """
        Sums E_kl over all pairs k, l of the link set, diagonal included. This is the internal connectivity tau of
        the link-induced subgraph.

        PARAMETERS
        ----------
        linkSet : LinkSet
            Links of the subgraph.

        RETURNS
        -------
        float
            Quadratic form of the membership vector with E.
        """
        result = 0.0
        for k in linkSet:
            result += self.__weights.getValue(k, k)
            for l, weight in self.__neighbors[k]:
                if linkSet.contains(l):
                    result += weight
        return result

    def normalizedIncidence(self) -> Matrix:
        """
        Returns the n x m matrix D with D_ik = B_ik / sqrt(k_i), where B is the node-link incidence matrix. E equals
        the product of the transpose of D with D.

        RETURNS
        -------
        Matrix
            Normalized incidence matrix.
        """
        result = Matrix(self.__graph.nodeCount(), self.__size)
        for link_id in range(self.__size):
            for node in self.__graph.getLink(link_id):
                result.setValue(node, link_id, math.sqrt(self.__node_weights[node]))
        return result

    def backProjection(self) -> Matrix:
        """
        Returns the n x n product of D with its transpose. An off-diagonal entry is A_ij / sqrt(k_i k_j), every
        diagonal entry is 1.

        RETURNS
        -------
        Matrix
            Weighted adjacency of the graph whose line graph E is.
        """
        incidence = self.normalizedIncidence()
        node_count = self.__graph.nodeCount()
        result = Matrix(node_count, node_count)
        for link_id in range(self.__size):
            i, j = self.__graph.getLink(link_id)
            d_i = incidence.getValue(i, link_id)
            d_j = incidence.getValue(j, link_id)
            result.addValue(i, i, d_i * d_i)
            result.addValue(j, j, d_j * d_j)
            result.addValue(i, j, d_i * d_j)
            result.addValue(j, i, d_i * d_j)
        return result

    def rowNormSquared(self, node: int) -> float:
        """
        Returns the squared Euclidean norm of row node of D, which is 1 for every node.
        """
        incidence = self.normalizedIncidence()
        result = 0.0
        for link_id in range(self.__size):
            value = incidence.getValue(node, link_id)
            result += value * value
        return result

    def isSymmetric(self) -> bool:
        for k in range(self.__size):
            for l in range(k + 1, self.__size):
                if self.__weights.getValue(k, l) != self.__weights.getValue(l, k):
                    return False
        return True

from __future__ import annotations

from LinkCommunity.Cost.IllegalToggle import IllegalToggle
from LinkCommunity.Cost.Toggle import Toggle
from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Graph.LinkSet import LinkSet
from LinkCommunity.Parameter.Direction import Direction


class SubgraphState(object):

    REFRESH_INTERVAL = 4096

    __graph: Graph
    __links: LinkSet
    __internal_degree: list
    __sigma: float
    __toggle_count: int

    def __init__(self,
                 graph: Graph,
                 linkSet: LinkSet = None):
        """
        A link-induced subgraph together with the internal degree k_i^in of every node and the node cut sigma,
        both kept up to date while links are toggled.

        PARAMETERS
        ----------
        graph : Graph
            Graph the subgraph lives in.
        linkSet : LinkSet
            Links of the subgraph, copied. The empty set if not given.
        """
        self.__graph = graph
        if linkSet is None:
            self.__links = graph.emptySet()
        else:
            self.__links = linkSet.copy()
        self.__internal_degree = [0] * graph.nodeCount()
        for link_id in self.__links:
            i, j = graph.getLink(link_id)
            self.__internal_degree[i] += 1
            self.__internal_degree[j] += 1
        self.__sigma = self.recomputeSigma()
        self.__toggle_count = 0

    @staticmethod
    def termDelta(degree: int, internalDegree: int, change: int) -> float:
        """
        Change of the sigma term k^in (k - k^in) / k of one node when its internal degree changes by change.
        """
        return change * (degree - 2 * internalDegree - change) / degree

    @staticmethod
    def psiOf(sigma: float, kIn: int, linkCount: int) -> float:
        """
        Evaluates the ratio node-cut from its parts. The empty subgraph and the whole graph both get cost 1.

        PARAMETERS
        ----------
        sigma : float
            Node cut of the subgraph.
        kIn : int
            Sum of the internal degrees, twice the number of links of the subgraph.
        linkCount : int
            Number of links m of the graph.

        RETURNS
        -------
        float
            sigma / (kIn (1 - kIn / 2m)).
        """
        if kIn == 0 or kIn == 2 * linkCount:
            return 1.0
        return sigma / (kIn * (1.0 - kIn / (2.0 * linkCount)))

    def getGraph(self) -> Graph:
        return self.__graph

    def getLinkSet(self) -> LinkSet:
        """
        Returns the live link set of the state. Copy it before keeping it.
        """
        return self.__links

    def cardinality(self) -> int:
        return self.__links.cardinality()

    def isEmpty(self) -> bool:
        return self.__links.isEmpty()

    def isConnected(self) -> bool:
        return self.__graph.isConnected(self.__links)

    def internalDegree(self, node: int) -> int:
        return self.__internal_degree[node]

    def externalDegree(self, node: int) -> int:
        return self.__graph.degree(node) - self.__internal_degree[node]

    def isBoundary(self, node: int) -> bool:
        return 0 < self.__internal_degree[node] < self.__graph.degree(node)

    def nodes(self) -> list:
        """
        Returns C(L), the nodes with at least one link in the subgraph, in ascending order.
        """
        return [node for node, degree in enumerate(self.__internal_degree) if degree > 0]

    def boundaryNodes(self) -> list:
        """
        Returns the nodes having both links inside and outside the subgraph, in ascending order.
        """
        return [node for node in range(len(self.__internal_degree)) if self.isBoundary(node)]

    def kIn(self) -> int:
        return 2 * self.__links.cardinality()

    def sigma(self) -> float:
        return self.__sigma

    def recomputeSigma(self) -> float:
        """
        Computes the node cut from scratch, sum over nodes of k_i^in k_i^out / k_i.

        RETURNS
        -------
        float
            Node cut of the current subgraph.
        """
        result = 0.0
        for node, internal in enumerate(self.__internal_degree):
            if internal > 0:
                degree = self.__graph.degree(node)
                result += internal * (degree - internal) / degree
        return result

    def refresh(self):
        self.__sigma = self.recomputeSigma()
        self.__toggle_count = 0

    def tau(self) -> float:
        """
        Computes the internal connectivity, sum over nodes of k_i^in k_i^in / k_i.
        """
        result = 0.0
        for node, internal in enumerate(self.__internal_degree):
            if internal > 0:
                result += internal * internal / self.__graph.degree(node)
        return result

    def psi(self) -> float:
        return SubgraphState.psiOf(self.__sigma, self.kIn(), self.__graph.linkCount())

    def psiAfter(self, deltaSigma: float, deltaLinks: int) -> float:
        """
        Evaluates the cost of a neighbouring place from the local changes of the numerator and of the link count.

        PARAMETERS
        ----------
        deltaSigma : float
            Change of the node cut.
        deltaLinks : int
            Change of the number of links.

        RETURNS
        -------
        float
            Cost after the change.
        """
        return SubgraphState.psiOf(self.__sigma + deltaSigma,
                                   2 * (self.__links.cardinality() + deltaLinks),
                                   self.__graph.linkCount())

    def linkSigmaDelta(self, linkId: int, direction: Direction) -> float:
        """
        Returns the change of the node cut when the link is included or excluded. Only the terms of the two end
        nodes change.
        """
        change = 1 if direction is Direction.INCLUDE else -1
        result = 0.0
        for node in self.__graph.getLink(linkId):
            result += SubgraphState.termDelta(self.__graph.degree(node), self.__internal_degree[node], change)
        return result

    def __checkLink(self, linkId: int, direction: Direction):
        if direction is Direction.INCLUDE and self.__links.contains(linkId):
            raise IllegalToggle("Link " + str(linkId) + " is already in the subgraph")
        if direction is Direction.EXCLUDE and not self.__links.contains(linkId):
            raise IllegalToggle("Link " + str(linkId) + " is not in the subgraph")

    def deltaPsiLink(self, linkId: int, direction: Direction) -> float:
        """
        Computes the change of the cost when one link is included into or excluded from the subgraph, without
        changing the state.

        PARAMETERS
        ----------
        linkId : int
            Link to toggle.
        direction : Direction
            INCLUDE requires the link outside the subgraph, EXCLUDE inside.

        RETURNS
        -------
        float
            Cost after the toggle minus the current cost.
        """
        self.__checkLink(linkId, direction)
        change = 1 if direction is Direction.INCLUDE else -1
        return self.psiAfter(self.linkSigmaDelta(linkId, direction), change) - self.psi()

    def nodeToggleLinks(self, node: int, direction: Direction) -> list:
        """
        Returns the links a node move toggles. Including a node adds all its links to nodes of C(L) that are not
        in the subgraph yet; excluding it removes all its links of the subgraph.

        PARAMETERS
        ----------
        node : int
            Node to include or exclude.
        direction : Direction
            Include or exclude.

        RETURNS
        -------
        list
            Link ids toggled by the move, possibly empty.
        """
        result = []
        for neighbor, link_id in self.__graph.getAdjacency(node):
            if direction is Direction.INCLUDE:
                if self.__internal_degree[neighbor] > 0 and not self.__links.contains(link_id):
                    result.append(link_id)
            elif self.__links.contains(link_id):
                result.append(link_id)
        return result

    def nodeSigmaDelta(self, node: int, direction: Direction, links: list = None) -> float:
        """
        Returns the change of the node cut for a node move. The internal degree of the node changes by the number
        of toggled links, that of every other end node by one.
        """
        if links is None:
            links = self.nodeToggleLinks(node, direction)
        change = 1 if direction is Direction.INCLUDE else -1
        result = SubgraphState.termDelta(self.__graph.degree(node), self.__internal_degree[node], change * len(links))
        for link_id in links:
            i, j = self.__graph.getLink(link_id)
            other = j if i == node else i
            result += SubgraphState.termDelta(self.__graph.degree(other), self.__internal_degree[other], change)
        return result

    def deltaPsiNode(self, node: int, direction: Direction) -> float:
        """
        Computes the change of the cost when a node is included into or excluded from the subgraph together with
        its links, without changing the state.

        PARAMETERS
        ----------
        node : int
            Node to move.
        direction : Direction
            INCLUDE requires at least one link from the node to C(L) outside the subgraph, EXCLUDE requires the
            node in C(L).

        RETURNS
        -------
        float
            Cost after the move minus the current cost.
        """
        links = self.nodeToggleLinks(node, direction)
        if len(links) == 0:
            raise IllegalToggle("Node " + str(node) + " cannot be " +
                                ("included" if direction is Direction.INCLUDE else "excluded"))
        change = len(links) if direction is Direction.INCLUDE else -len(links)
        return self.psiAfter(self.nodeSigmaDelta(node, direction, links), change) - self.psi()

    def toggleLink(self, linkId: int) -> bool:
        """
        Includes the link if it is outside the subgraph and excludes it otherwise, updating internal degrees and
        the node cut incrementally. The node cut is recomputed from scratch every REFRESH_INTERVAL toggles.

        PARAMETERS
        ----------
        linkId : int
            Link to toggle.

        RETURNS
        -------
        bool
            True, if the link is in the subgraph after the toggle.
        """
        direction = Direction.EXCLUDE if self.__links.contains(linkId) else Direction.INCLUDE
        self.__sigma += self.linkSigmaDelta(linkId, direction)
        change = 1 if direction is Direction.INCLUDE else -1
        for node in self.__graph.getLink(linkId):
            self.__internal_degree[node] += change
        self.__links.toggle(linkId)
        self.__toggle_count += 1
        if self.__toggle_count >= SubgraphState.REFRESH_INTERVAL:
            self.refresh()
        return direction is Direction.INCLUDE

    def applyToggle(self, toggle: Toggle) -> list:
        """
        Applies a move to the state in place.

        PARAMETERS
        ----------
        toggle : Toggle
            Legal link or node move.

        RETURNS
        -------
        list
            Ids of the links toggled by the move.
        """
        if toggle.isNodeMove():
            links = self.nodeToggleLinks(toggle.getElement(), toggle.getDirection())
            if len(links) == 0:
                raise IllegalToggle("Illegal move " + str(toggle))
        else:
            self.__checkLink(toggle.getElement(), toggle.getDirection())
            links = [toggle.getElement()]
        for link_id in links:
            self.toggleLink(link_id)
        return links

    def clone(self) -> SubgraphState:
        result = SubgraphState.__new__(SubgraphState)
        result.__graph = self.__graph
        result.__links = self.__links.copy()
        result.__internal_degree = list(self.__internal_degree)
        result.__sigma = self.__sigma
        result.__toggle_count = self.__toggle_count
        return result

    def __repr__(self) -> str:
        return "SubgraphState(" + str(self.__links.getLinks()) + ", psi=" + str(self.psi()) + ")"

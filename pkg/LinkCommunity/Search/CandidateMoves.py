import heapq

from LinkCommunity.Cost.SubgraphState import SubgraphState
from LinkCommunity.Cost.Toggle import Toggle
from LinkCommunity.Parameter.Direction import Direction
from LinkCommunity.Parameter.SearchMode import SearchMode


class CandidateMoves(object):

    TOLERANCE = 1e-9

    __state: SubgraphState
    __mode: SearchMode
    __direction: Direction
    __entries: dict
    __heaps: dict
    __interior_allowed: bool
    __detached: list

    def __init__(self,
                 state: SubgraphState,
                 mode: SearchMode,
                 direction: Direction):
        """
        Priority structure of the moves a greedy phase can make from a state. For every candidate link or node it
        caches the local change of the node cut and the change of the link count. Both only depend on the internal
        degrees around the element, so after a move only the elements around the touched nodes are recomputed. The
        cost of a move is evaluated from the cached parts when the best move is requested.

        PARAMETERS
        ----------
        state : SubgraphState
            State the moves apply to. The structure must be updated after every change of the state.
        mode : SearchMode
            Link moves or node moves.
        direction : Direction
            Include or exclude moves.
        """
        self.__state = state
        self.__mode = mode
        self.__direction = direction
        self.__detached = []
        if mode is SearchMode.LINK_WISE and direction is Direction.INCLUDE:
            graph = state.getGraph()
            for link_id in range(graph.linkCount()):
                delta_sigma = 0.0
                for node in graph.getLink(link_id):
                    delta_sigma += SubgraphState.termDelta(graph.degree(node), 0, 1)
                self.__detached.append((delta_sigma, link_id))
            self.__detached.sort()
        self.rebuild()

    def __interiorAllowed(self) -> bool:
        # Excluding an interior element can only lower the cost once the subgraph holds more than half the links.
        return 2 * self.__state.cardinality() > self.__state.getGraph().linkCount()

    def __isCandidateLink(self, linkId: int) -> bool:
        graph = self.__state.getGraph()
        i, j = graph.getLink(linkId)
        if self.__direction is Direction.INCLUDE:
            if self.__state.getLinkSet().contains(linkId):
                return False
            return self.__state.internalDegree(i) > 0 or self.__state.internalDegree(j) > 0
        if not self.__state.getLinkSet().contains(linkId):
            return False
        return self.__interior_allowed or self.__state.isBoundary(i) or self.__state.isBoundary(j)

    def __isCandidateNode(self, node: int) -> bool:
        if self.__direction is Direction.INCLUDE:
            return len(self.__state.nodeToggleLinks(node, Direction.INCLUDE)) > 0
        if self.__state.internalDegree(node) == 0:
            return False
        return self.__interior_allowed or self.__state.isBoundary(node)

    def __compute(self, element: int) -> tuple:
        change = 1 if self.__direction is Direction.INCLUDE else -1
        if self.__mode is SearchMode.LINK_WISE:
            return self.__state.linkSigmaDelta(element, self.__direction), change
        links = self.__state.nodeToggleLinks(element, self.__direction)
        return self.__state.nodeSigmaDelta(element, self.__direction, links), change * len(links)

    def __isCandidate(self, element: int) -> bool:
        if self.__mode is SearchMode.LINK_WISE:
            return self.__isCandidateLink(element)
        return self.__isCandidateNode(element)

    def __refreshElement(self, element: int):
        if self.__isCandidate(element):
            entry = self.__compute(element)
            if self.__entries.get(element) != entry:
                self.__entries[element] = entry
                delta_sigma, change = entry
                heapq.heappush(self.__heaps.setdefault(change, []), (delta_sigma, element))
        elif element in self.__entries:
            del self.__entries[element]

    def __elementCount(self) -> int:
        graph = self.__state.getGraph()
        if self.__mode is SearchMode.LINK_WISE:
            return graph.linkCount()
        return graph.nodeCount()

    def rebuild(self):
        """
        Recomputes all candidates from scratch.
        """
        self.__interior_allowed = self.__interiorAllowed()
        self.__entries = {}
        self.__heaps = {}
        for element in range(self.__elementCount()):
            if self.__isCandidate(element):
                self.__entries[element] = self.__compute(element)
        for element, (delta_sigma, change) in self.__entries.items():
            self.__heaps.setdefault(change, []).append((delta_sigma, element))
        for heap in self.__heaps.values():
            heapq.heapify(heap)

    def update(self, toggledLinks: list):
        """
        Brings the structure up to date after the given links were toggled in the state. Only links incident to
        the touched nodes, or the touched nodes and their neighbours, are recomputed.

        PARAMETERS
        ----------
        toggledLinks : list
            Links toggled since the last update.
        """
        if self.__interiorAllowed() != self.__interior_allowed:
            self.rebuild()
            return
        graph = self.__state.getGraph()
        touched = set()
        for link_id in toggledLinks:
            touched.update(graph.getLink(link_id))
        elements = set()
        for node in touched:
            if self.__mode is SearchMode.LINK_WISE:
                for neighbor, link_id in graph.getAdjacency(node):
                    elements.add(link_id)
            else:
                elements.add(node)
                for neighbor, link_id in graph.getAdjacency(node):
                    elements.add(neighbor)
        for element in sorted(elements):
            self.__refreshElement(element)
        pending = sum(len(heap) for heap in self.__heaps.values())
        if pending > 4 * len(self.__entries) + 64:
            self.__compact()

    def __compact(self):
        self.__heaps = {}
        for element, (delta_sigma, change) in self.__entries.items():
            self.__heaps.setdefault(change, []).append((delta_sigma, element))
        for heap in self.__heaps.values():
            heapq.heapify(heap)

    def __top(self, change: int):
        heap = self.__heaps[change]
        while heap:
            delta_sigma, element = heap[0]
            if self.__entries.get(element) == (delta_sigma, change):
                return delta_sigma, element
            heapq.heappop(heap)
        return None

    def __bestDetached(self):
        for delta_sigma, link_id in self.__detached:
            i, j = self.__state.getGraph().getLink(link_id)
            if self.__state.internalDegree(i) == 0 and self.__state.internalDegree(j) == 0:
                return delta_sigma, link_id
        return None

    def __smallestElement(self, change: int) -> int:
        return min(element for element, entry in self.__entries.items() if entry[1] == change)

    def best(self):
        """
        Returns the move leading to the lowest cost, ties broken by the smallest element id. Moves that would
        empty the subgraph are never returned. Link-wise inclusion also considers the best link not touching the
        subgraph, which leaves it unconnected.

        RETURNS
        -------
        tuple
            The move as a Toggle and the cost after it, or None if there is no candidate.
        """
        tops = []
        size = self.__state.cardinality()
        pole = self.__state.getGraph().linkCount()
        for change in self.__heaps:
            if size + change <= 0:
                continue
            top = self.__top(change)
            if top is None:
                continue
            delta_sigma, element = top
            if size + change == pole:
                element = self.__smallestElement(change)
            tops.append((self.__state.psiAfter(delta_sigma, change), element))
        detached = self.__bestDetached()
        if detached is not None:
            delta_sigma, link_id = detached
            tops.append((self.__state.psiAfter(delta_sigma, 1), link_id))
        if len(tops) == 0:
            return None
        psi, element = min(tops)
        return Toggle(self.__mode, element, self.__direction), psi

    def candidates(self) -> list:
        """
        Returns the ids of the current candidate links or nodes in ascending order.
        """
        return sorted(self.__entries.keys())

    def verify(self) -> bool:
        """
        Shadow check of the cache: the candidate set and every cached cost change must agree with a computation
        from scratch on the current state.

        RETURNS
        -------
        bool
            True, if the cache is correct.
        """
        expected = [element for element in range(self.__elementCount()) if self.__isCandidate(element)]
        if expected != self.candidates():
            return False
        current = self.__state.psi()
        for element, (delta_sigma, change) in self.__entries.items():
            if self.__mode is SearchMode.LINK_WISE:
                delta = self.__state.deltaPsiLink(element, self.__direction)
            else:
                delta = self.__state.deltaPsiNode(element, self.__direction)
            if abs(self.__state.psiAfter(delta_sigma, change) - current - delta) > CandidateMoves.TOLERANCE:
                return False
        return True

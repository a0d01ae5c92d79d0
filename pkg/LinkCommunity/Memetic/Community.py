from __future__ import annotations

from LinkCommunity.Cost.SubgraphState import SubgraphState
from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Graph.LinkSet import LinkSet
from LinkCommunity.Landscape.CommunityRecord import CommunityRecord


class Community(object):

    __links: LinkSet
    __psi: float
    __range_lower_bound: int

    def __init__(self,
                 links: LinkSet,
                 psi: float,
                 rangeLowerBound: int):
        """
        A connected subgraph found by a search, frozen with its cost and a lower bound of its range.

        PARAMETERS
        ----------
        links : LinkSet
            Links of the community, copied.
        psi : float
            Cost of the community.
        rangeLowerBound : int
            Range the community is known to have at least.
        """
        self.__links = links.copy()
        self.__psi = psi
        self.__range_lower_bound = rangeLowerBound

    @staticmethod
    def fromState(state: SubgraphState, rangeLowerBound: int) -> Community:
        return Community(state.getLinkSet(), state.psi(), rangeLowerBound)

    def getLinks(self) -> LinkSet:
        return self.__links

    def getPsi(self) -> float:
        return self.__psi

    def getRangeLowerBound(self) -> int:
        return self.__range_lower_bound

    def size(self) -> int:
        return self.__links.cardinality()

    def sortKey(self) -> tuple:
        """
        Key ordering communities by cost, equal costs by their link ids.
        """
        return self.__psi, self.__links.getLinks()

    def distance(self, other: Community) -> int:
        return self.__links.symmetricDifferenceDistance(other.__links)

    def toState(self, graph: Graph) -> SubgraphState:
        return SubgraphState(graph, self.__links)

    def withRangeLowerBound(self, rangeLowerBound: int) -> Community:
        return Community(self.__links, self.__psi, rangeLowerBound)

    def toRecord(self) -> CommunityRecord:
        return CommunityRecord(self.__links, self.__psi, self.__range_lower_bound, False,
                               self.__range_lower_bound >= 2)

    def __eq__(self, other) -> bool:
        return isinstance(other, Community) and self.__links == other.__links

    def __hash__(self) -> int:
        return hash(self.__links)

    def __repr__(self) -> str:
        return "Community(" + str(self.__links.getLinks()) + ", psi=" + str(self.__psi) + ")"

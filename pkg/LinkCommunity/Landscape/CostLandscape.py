import logging
import warnings
from typing import Iterator

import numpy as np

from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Graph.LinkSet import LinkSet
from LinkCommunity.Landscape.CommunityRecord import CommunityRecord
from LinkCommunity.Landscape.LandscapePlace import LandscapePlace
from LinkCommunity.Landscape.NotAMinimum import NotAMinimum
from LinkCommunity.Landscape.TooLarge import TooLarge
from LinkCommunity.Landscape.VerificationReport import VerificationReport

logger = logging.getLogger(__name__)


class CostLandscape(object):

    MAX_LINKS = 24
    EPSILON = 1e-12

    __graph: Graph
    __indices: np.ndarray
    __sizes: np.ndarray
    __psi: np.ndarray
    __minima: list

    def __init__(self, graph: Graph):
        """
        Enumerates all 2^m link subsets of a small graph. Place i of the landscape is the subset whose membership
        bit vector is i, so the distance of two places is the population count of their indices XORed. The costs of
        all places are computed at once with numpy.

        PARAMETERS
        ----------
        graph : Graph
            Graph with at most MAX_LINKS links.
        """
        link_count = graph.linkCount()
        if link_count > CostLandscape.MAX_LINKS:
            raise TooLarge("Exhaustive enumeration supports at most " + str(CostLandscape.MAX_LINKS) +
                           " links, the graph has " + str(link_count))
        self.__graph = graph
        self.__minima = None
        logger.info("Enumerating %d places of a graph with %d links", 1 << link_count, link_count)
        self.__indices = np.arange(1 << link_count, dtype=np.uint32)
        self.__sizes = np.zeros(1 << link_count, dtype=np.uint8)
        for link_id in range(link_count):
            self.__sizes += self.__column(link_id).astype(np.uint8)
        sigma = np.zeros(1 << link_count, dtype=np.float64)
        for node in range(graph.nodeCount()):
            degree = graph.degree(node)
            internal = np.zeros(1 << link_count, dtype=np.int16)
            for neighbor, link_id in graph.getAdjacency(node):
                internal += self.__column(link_id)
            sigma += internal * (degree - internal) / degree
        self.__psi = np.ones(1 << link_count, dtype=np.float64)
        inner = (self.__sizes > 0) & (self.__sizes < link_count)
        k_in = 2.0 * self.__sizes[inner]
        self.__psi[inner] = sigma[inner] / (k_in * (1.0 - k_in / (2.0 * link_count)))

    def __column(self, linkId: int) -> np.ndarray:
        """
        Membership of one link in every place, derived from the place indices.
        """
        return ((self.__indices >> np.uint32(linkId)) & np.uint32(1)).astype(np.int16)

    def getGraph(self) -> Graph:
        return self.__graph

    def size(self) -> int:
        """
        Returns the number of places, 2^m.
        """
        return len(self.__psi)

    def psiOf(self, linkSet: LinkSet) -> float:
        return float(self.__psi[linkSet.getBits()])

    def get(self, index: int) -> LandscapePlace:
        links = LinkSet(self.__graph.linkCount(), bits=int(index))
        return LandscapePlace(int(index), links, float(self.__psi[index]), self.__graph.isConnected(links))

    def places(self) -> Iterator[LandscapePlace]:
        """
        Yields every place in index order, one at a time.
        """
        for index in range(self.size()):
            yield self.get(index)

    def placesOfSize(self, size: int) -> list:
        """
        Returns the places with the given number of links in index order, a circle of latitude of the landscape.

        PARAMETERS
        ----------
        size : int
            Number of links.

        RETURNS
        -------
        list
            LandscapePlaces with size links.
        """
        return [self.get(index) for index in np.flatnonzero(self.__sizes == size)]

    def antipode(self, index: int) -> LandscapePlace:
        """
        Returns the place of the complementary link set.
        """
        return self.get(((1 << self.__graph.linkCount()) - 1) ^ int(index))

    def __lowestNeighbors(self) -> np.ndarray:
        result = np.full(self.size(), np.inf)
        for link_id in range(self.__graph.linkCount()):
            np.minimum(result, self.__psi[self.__indices ^ np.uint32(1 << link_id)], out=result)
        return result

    def __range(self, index: int) -> int:
        lower = self.__psi < self.__psi[index] - CostLandscape.EPSILON
        if not lower.any():
            return self.__graph.linkCount() + 1
        return int(self.__sizes[self.__indices[lower] ^ np.uint32(index)].min())

    def localMinima(self) -> list:
        """
        Finds every connected place other than the empty set and the whole graph that has no neighbour at
        distance one with strictly lower cost, together with its exact range. The result is sorted by cost and
        then by link ids.

        RETURNS
        -------
        list
            CommunityRecords of all local minima.
        """
        if self.__minima is None:
            link_count = self.__graph.linkCount()
            candidates = (self.__lowestNeighbors() >= self.__psi - CostLandscape.EPSILON) & \
                         (self.__sizes > 0) & (self.__sizes < link_count)
            result = []
            for index in np.flatnonzero(candidates):
                links = LinkSet(link_count, bits=int(index))
                if self.__graph.isConnected(links):
                    result.append(CommunityRecord(links, float(self.__psi[index]), self.__range(int(index)), True))
            result.sort(key=lambda record: (record.getPsi(), record.getLinks().getLinks()))
            self.__minima = result
            logger.info("Landscape has %d local minima", len(result))
        return self.__minima

    def rangeOf(self, linkSet: LinkSet) -> int:
        """
        Returns the exact range of a place: its smallest distance to any place, connected or not, of strictly
        lower cost. A global minimum gets m + 1. A place that is not a local minimum still gets its range, with a
        NotAMinimum warning.

        PARAMETERS
        ----------
        linkSet : LinkSet
            Place to measure.

        RETURNS
        -------
        int
            Range of the place.
        """
        index = linkSet.getBits()
        result = self.__range(index)
        if result < 2 or not self.__graph.isConnected(linkSet) or linkSet.isFull():
            warnings.warn(NotAMinimum("Place " + str(linkSet.getLinks()) + " is not a local minimum"))
        return result

    def verifySearchResult(self, found: list, oracle: list = None) -> VerificationReport:
        """
        Compares the communities of a search with the local minima of this landscape.

        PARAMETERS
        ----------
        found : list
            CommunityRecords of a search.
        oracle : list
            CommunityRecords to compare with, the local minima of this landscape if not given.

        RETURNS
        -------
        VerificationReport
            Matched, missed and spurious communities.
        """
        if oracle is None:
            oracle = self.localMinima()
        return VerificationReport(found, oracle)

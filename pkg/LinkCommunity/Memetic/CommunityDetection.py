import logging
import math

from Util.RandomArray import RandomArray

from LinkCommunity.Cost.SubgraphState import SubgraphState
from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Graph.LinkSet import LinkSet
from LinkCommunity.Memetic.Community import Community
from LinkCommunity.Memetic.MemeticEvolution import MemeticEvolution
from LinkCommunity.Parameter.EvolutionParameter import EvolutionParameter
from LinkCommunity.Parameter.LinkWiseStrategy import LinkWiseStrategy
from LinkCommunity.Parameter.SearchMode import SearchMode
from LinkCommunity.Search.Adaptation import Adaptation

logger = logging.getLogger(__name__)


class CommunityDetection(object):

    EPSILON = 1e-12

    __graph: Graph
    __parameter: EvolutionParameter

    def __init__(self,
                 graph: Graph,
                 parameter: EvolutionParameter):
        """
        The complete detection pipeline: node-wise memetic evolution from every seed, then a link-wise evolution
        or a link-wise adaptation of every community found, then a final filter keeping connected local minima
        that have no lower community within their minimal range.

        PARAMETERS
        ----------
        graph : Graph
            Graph to search.
        parameter : EvolutionParameter
            Evolution parameters of both stages.
        """
        self.__graph = graph
        self.__parameter = parameter

    def randomSeeds(self) -> list:
        """
        Draws max(population size, ceil(sqrt(m))) distinct random single links, at most m.

        RETURNS
        -------
        list
            Single-link LinkSets.
        """
        link_count = self.__graph.linkCount()
        count = min(link_count, max(self.__parameter.getPopulationSize(), math.ceil(math.sqrt(link_count))))
        order = RandomArray.indexArray(link_count, self.__parameter.getSeed())
        return [LinkSet(link_count, [order[index]]) for index in range(count)]

    @staticmethod
    def __collect(target: list, communities: list):
        for community in communities:
            if community not in target:
                target.append(community)

    def __nodeWiseStage(self, seeds: list) -> list:
        evolution = MemeticEvolution(self.__parameter, SearchMode.NODE_WISE)
        result = []
        for stream, seed in enumerate(seeds):
            if seed.isEmpty():
                continue
            population = evolution.evolvePopulation(SubgraphState(self.__graph, seed), stream)
            CommunityDetection.__collect(result, population.getMembers())
            CommunityDetection.__collect(result, population.getSeedPool())
        return result

    def __linkWiseStage(self, candidates: list, firstStream: int) -> list:
        result = []
        if self.__parameter.getLinkWiseStrategy() is LinkWiseStrategy.MEMETIC:
            evolution = MemeticEvolution(self.__parameter, SearchMode.LINK_WISE)
            for index, candidate in enumerate(candidates):
                population = evolution.evolvePopulation(candidate.toState(self.__graph), firstStream + index)
                CommunityDetection.__collect(result, population.getMembers())
                CommunityDetection.__collect(result, population.getSeedPool())
            return result
        adaptation = Adaptation(self.__parameter.adaptationParameter(SearchMode.LINK_WISE))
        resolution = self.__parameter.getResolution()
        for candidate in candidates:
            adapted = adaptation.adapt(candidate.toState(self.__graph))
            state = adapted.getCommunity()
            logger.debug("Link-wise adaptation of %d links took %d steps", candidate.size(), adapted.getStepsTaken())
            found = [Community.fromState(state, Adaptation.rangeCheck(state, resolution))]
            for links in adapted.getComponentsSpawned():
                spawned = SubgraphState(self.__graph, links)
                found.append(Community.fromState(spawned, Adaptation.rangeCheck(spawned, resolution)))
            CommunityDetection.__collect(result, found)
        return result

    def finalFilter(self, candidates: list) -> list:
        """
        Keeps the connected communities other than the whole graph that no single link change improves, and drops
        every community that has a lower kept community within its minimal range. Every kept community carries the
        minimal range of the resolution as its range lower bound.

        PARAMETERS
        ----------
        candidates : list
            Communities of the search stages.

        RETURNS
        -------
        list
            Kept communities sorted by cost, equal costs by link ids.
        """
        resolution = self.__parameter.getResolution()
        checked = []
        for candidate in sorted(candidates, key=lambda community: community.sortKey()):
            links = candidate.getLinks()
            if links.isFull() or not self.__graph.isConnected(links):
                continue
            state = SubgraphState(self.__graph, links)
            bound = Adaptation.rangeCheck(state, resolution)
            if bound < 2:
                continue
            checked.append(Community(links, state.psi(), bound))
        result = []
        for candidate in checked:
            minimal_range = resolution.minimalRange(candidate.size())
            if any(kept.getPsi() < candidate.getPsi() - CommunityDetection.EPSILON and
                   kept.distance(candidate) < minimal_range for kept in result):
                continue
            if candidate not in result:
                result.append(candidate)
        return result

    def detect(self, seeds: list = None) -> list:
        """
        Runs the detection pipeline.

        PARAMETERS
        ----------
        seeds : list
            Start LinkSets; random single links if not given or empty.

        RETURNS
        -------
        list
            Detected communities sorted by cost, equal costs by link ids. Communities may share links.
        """
        if seeds is None or len(seeds) == 0:
            seeds = self.randomSeeds()
        logger.info("Detecting communities from %d seeds", len(seeds))
        node_wise = self.__nodeWiseStage(seeds)
        logger.info("Node-wise stage found %d communities", len(node_wise))
        node_wise.sort(key=lambda community: community.sortKey())
        link_wise = self.__linkWiseStage(node_wise, len(seeds))
        logger.info("Link-wise stage found %d communities", len(link_wise))
        result = self.finalFilter(link_wise)
        logger.info("Detected %d communities", len(result))
        return result

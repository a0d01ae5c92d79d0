import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from LinkCommunity.Cost.SubgraphState import SubgraphState
from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Memetic.Community import Community
from LinkCommunity.Memetic.DegenerateParents import DegenerateParents
from LinkCommunity.Memetic.AlreadyCrossed import AlreadyCrossed
from LinkCommunity.Memetic.Population import Population
from LinkCommunity.Parameter.Direction import Direction
from LinkCommunity.Parameter.EvolutionParameter import EvolutionParameter
from LinkCommunity.Parameter.SearchMode import SearchMode
from LinkCommunity.Search.Adaptation import Adaptation

logger = logging.getLogger(__name__)


class MemeticEvolution(object):

    __parameter: EvolutionParameter
    __mode: SearchMode
    __adaptation: Adaptation

    def __init__(self,
                 parameter: EvolutionParameter,
                 mode: SearchMode):
        """
        Evolution of a population of communities around one adapted seed. Each generation the best community is
        mutated with low variance and crossed with random partners; every mutant and offspring is adapted before
        selection. A stale population with low innovation is renewed by high variance mutants of the best community,
        and the evolution ends when the best community got too old.

        PARAMETERS
        ----------
        parameter : EvolutionParameter
            Evolution parameters.
        mode : SearchMode
            Node-wise or link-wise mutation and adaptation.
        """
        self.__parameter = parameter
        self.__mode = mode
        self.__adaptation = Adaptation(parameter.adaptationParameter(mode))

    def getMode(self) -> SearchMode:
        return self.__mode

    def __random(self, stream: int, generation: int, slot: int) -> np.random.Generator:
        return self.__parameter.randomStream(stream, generation, slot)

    def __community(self, state: SubgraphState) -> Community:
        return Community.fromState(state, Adaptation.rangeCheck(state, self.__parameter.getResolution()))

    def adaptState(self, state: SubgraphState) -> Community:
        return self.__community(self.__adaptation.adapt(state).getCommunity())

    @staticmethod
    def __frontierNodes(state: SubgraphState) -> list:
        graph = state.getGraph()
        result = set()
        links = state.getLinkSet()
        for node in state.nodes():
            for neighbor, link_id in graph.getAdjacency(node):
                if not links.contains(link_id):
                    result.add(neighbor)
        return sorted(result)

    @staticmethod
    def __frontierLinks(state: SubgraphState) -> list:
        graph = state.getGraph()
        result = set()
        links = state.getLinkSet()
        for node in state.nodes():
            for neighbor, link_id in graph.getAdjacency(node):
                if not links.contains(link_id):
                    result.add(link_id)
        return sorted(result)

    def __mutateNodes(self, state: SubgraphState, variance: float, rng: np.random.Generator):
        budget = max(1, math.ceil(variance * len(state.nodes())))
        count = int(rng.integers(1, budget + 1))
        boundary = state.boundaryNodes()
        excluded = 0
        if len(boundary) > 0:
            for node in rng.permutation(boundary)[:count]:
                links = state.nodeToggleLinks(int(node), Direction.EXCLUDE)
                if 0 < len(links) < state.cardinality():
                    for link_id in links:
                        state.toggleLink(link_id)
                    excluded += 1
        for _ in range(excluded):
            frontier = MemeticEvolution.__frontierNodes(state)
            if len(frontier) == 0:
                break
            node = int(frontier[int(rng.integers(len(frontier)))])
            for link_id in state.nodeToggleLinks(node, Direction.INCLUDE):
                state.toggleLink(link_id)

    def __mutateLinksUniform(self, state: SubgraphState, count: int, rng: np.random.Generator):
        for _ in range(count):
            if rng.random() < 0.5 and state.cardinality() > 1:
                members = state.getLinkSet().getLinks()
                state.toggleLink(members[int(rng.integers(len(members)))])
            else:
                frontier = MemeticEvolution.__frontierLinks(state)
                if len(frontier) > 0:
                    state.toggleLink(frontier[int(rng.integers(len(frontier)))])

    def __mutateLinksAtNode(self, state: SubgraphState, count: int, rng: np.random.Generator) -> bool:
        boundary = state.boundaryNodes()
        if len(boundary) == 0:
            return False
        node = boundary[int(rng.integers(len(boundary)))]
        incident = [link_id for neighbor, link_id in state.getGraph().getAdjacency(node)]
        for link_id in rng.permutation(incident)[:count]:
            link_id = int(link_id)
            if state.getLinkSet().contains(link_id) and state.cardinality() == 1:
                continue
            state.toggleLink(link_id)
        return True

    def mutate(self,
               community: Community,
               graph: Graph,
               variance: float,
               rng: np.random.Generator) -> SubgraphState:
        """
        Changes at most a proportion variance of the nodes or links of a community. Node-wise, a random number of
        boundary nodes is excluded and the same number of neighbouring nodes is included with all their links into
        the subgraph. Link-wise, one of two operators is drawn: uniform inclusion or exclusion of single links, or
        the same number of changes concentrated on the links of one boundary node. The subgraph is never emptied.

        PARAMETERS
        ----------
        community : Community
            Parent community.
        graph : Graph
            Graph the community lives in.
        variance : float
            Mutation variance in (0, 1).
        rng : np.random.Generator
            Random stream of the mutation.

        RETURNS
        -------
        SubgraphState
            Mutant, not adapted.
        """
        state = community.toState(graph)
        if self.__mode is SearchMode.NODE_WISE:
            self.__mutateNodes(state, variance, rng)
            return state
        budget = max(1, math.ceil(variance * state.cardinality()))
        count = int(rng.integers(1, budget + 1))
        if rng.random() < 0.5 or not self.__mutateLinksAtNode(state, count, rng):
            self.__mutateLinksUniform(state, count, rng)
        return state

    def __crossChildren(self, first: Community, second: Community, graph: Graph) -> list:
        children = []
        intersection = first.getLinks().intersection(second.getLinks())
        if not intersection.isEmpty():
            children.append(self.adaptState(SubgraphState(graph, intersection)))
        children.append(self.adaptState(SubgraphState(graph, first.getLinks().union(second.getLinks()))))
        return children

    def crossover(self,
                  first: Community,
                  second: Community,
                  graph: Graph,
                  population: Population) -> list:
        """
        Crosses two communities by adapting their intersection and their union. An unconnected start is replaced
        by its main component, and an empty intersection gives no child. A pair is crossed only once, and parents
        of which one contains the other are not crossed.

        PARAMETERS
        ----------
        first : Community
            First parent.
        second : Community
            Second parent.
        graph : Graph
            Graph the communities live in.
        population : Population
            Population remembering the crossed pairs.

        RETURNS
        -------
        list
            Adapted children, the intersection child first if there is one.
        """
        population.checkCrossable(first, second)
        population.markCrossed(first, second)
        return self.__crossChildren(first, second, graph)

    def __run(self, jobs: list) -> list:
        if self.__parameter.getThreads() > 1 and len(jobs) > 1:
            with ThreadPoolExecutor(max_workers=self.__parameter.getThreads()) as executor:
                return list(executor.map(lambda job: job(), jobs))
        return [job() for job in jobs]

    def __mutants(self,
                  best: Community,
                  graph: Graph,
                  variance: float,
                  count: int,
                  stream: int,
                  generation: int,
                  firstSlot: int) -> list:
        def job(slot: int):
            return lambda: self.adaptState(self.mutate(best, graph, variance, self.__random(stream, generation, slot)))
        return [job(firstSlot + index) for index in range(count)]

    def renew(self,
              population: Population,
              graph: Graph,
              stream: int,
              generation: int) -> int:
        """
        Mutates the best community with high variance as often as the population is large and merges the adapted
        mutants into the population.

        RETURNS
        -------
        int
            Number of mutants that became members.
        """
        jobs = self.__mutants(population.getBest(), graph, self.__parameter.getVarianceHigh(),
                              self.__parameter.getPopulationSize(), stream, generation,
                              self.__parameter.getMutantsPerGeneration() + 1)
        population.markRenewed()
        return population.select(self.__run(jobs))

    def evolvePopulation(self,
                         seed: SubgraphState,
                         stream: int = 0) -> Population:
        """
        Runs the evolution for one seed and returns the final population, seed pool included.

        PARAMETERS
        ----------
        seed : SubgraphState
            Nonempty start subgraph; it is adapted first.
        stream : int
            Index separating the random streams of evolutions of different seeds.

        RETURNS
        -------
        Population
            Final population.
        """
        graph = seed.getGraph()
        parameter = self.__parameter
        population = Population(parameter.getPopulationSize(), parameter.getResolution(),
                                parameter.getInnovationWindow())
        population.select([self.adaptState(seed)])
        population.select(self.__run(self.__mutants(population.getBest(), graph, parameter.getVarianceHigh(),
                                                    parameter.getPopulationSize(), stream, 0, 1)))
        generation = 0
        while population.getBestAge() <= parameter.getMaxBestAge():
            generation += 1
            best = population.getBest()
            jobs = self.__mutants(best, graph, parameter.getVarianceLow(), parameter.getMutantsPerGeneration(),
                                  stream, generation, 1)
            partners = [member for member in population.getMembers()[1:]]
            order = self.__random(stream, generation, 0).permutation(len(partners))
            crossed = 0
            for index in order:
                if crossed >= parameter.getCrossoverPartners():
                    break
                partner = partners[int(index)]
                try:
                    population.checkCrossable(best, partner)
                except (DegenerateParents, AlreadyCrossed):
                    continue
                population.markCrossed(best, partner)
                jobs.append(lambda partner=partner: self.__crossChildren(best, partner, graph))
                crossed += 1
            candidates = []
            for result in self.__run(jobs):
                if isinstance(result, list):
                    candidates.extend(result)
                else:
                    candidates.append(result)
            admitted = population.select(candidates)
            population.endGeneration(admitted, len(candidates))
            logger.debug("Generation %d: best psi %.6f, best age %d, admitted %d of %d", generation,
                         population.getBest().getPsi(), population.getBestAge(), admitted, len(candidates))
            if population.needsRenewal(parameter.getInnovationWindow(), parameter.getInnovationThreshold()):
                logger.debug("Renewing population in generation %d", generation)
                self.renew(population, graph, stream, generation)
        return population

    def evolve(self,
               seed: SubgraphState,
               stream: int = 0) -> list:
        """
        Runs the evolution for one seed.

        PARAMETERS
        ----------
        seed : SubgraphState
            Nonempty start subgraph.
        stream : int
            Index separating the random streams of evolutions of different seeds.

        RETURNS
        -------
        list
            Communities of the final population, best first.
        """
        return list(self.evolvePopulation(seed, stream).getMembers())

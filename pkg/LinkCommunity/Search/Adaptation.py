import logging

from LinkCommunity.Cost.SubgraphState import SubgraphState
from LinkCommunity.Parameter.AdaptationParameter import AdaptationParameter
from LinkCommunity.Parameter.Direction import Direction
from LinkCommunity.Parameter.Resolution import Resolution
from LinkCommunity.Parameter.SearchMode import SearchMode
from LinkCommunity.Search.AdaptationResult import AdaptationResult
from LinkCommunity.Search.CandidateMoves import CandidateMoves
from LinkCommunity.Search.EmptySeed import EmptySeed

logger = logging.getLogger(__name__)


class Adaptation(object):

    EPSILON = 1e-12

    __parameter: AdaptationParameter

    def __init__(self, parameter: AdaptationParameter):
        """
        Deterministic greedy local search. A search alternates inclusion and exclusion phases, each phase applying
        the move with the lowest resulting cost until no lower place than the best one seen can be reached within
        the tunnel length allowed by the resolution.

        PARAMETERS
        ----------
        parameter : AdaptationParameter
            Move space, resolution and start direction of the search.
        """
        self.__parameter = parameter

    def getParameter(self) -> AdaptationParameter:
        return self.__parameter

    def greedyPhase(self,
                    state: SubgraphState,
                    direction: Direction) -> tuple:
        """
        Runs one inclusion or exclusion phase on the state in place. Each step applies the best move. A step to a
        place lower than the best place seen resets the tunnel, any other step extends it by the number of links
        it toggles. When the tunnel gets longer than the resolution allows, or no move is left, the state is rolled
        back to the best place seen. In node-wise exclusion a subgraph falling apart is cut down to its main
        component.

        PARAMETERS
        ----------
        state : SubgraphState
            Nonempty state, changed in place.
        direction : Direction
            Include or exclude.

        RETURNS
        -------
        tuple
            Whether the phase lowered the cost, and the number of moves applied.
        """
        mode = self.__parameter.getMode()
        graph = state.getGraph()
        moves = CandidateMoves(state, mode, direction)
        best_psi = state.psi()
        best_size = state.cardinality()
        since_best = []
        tunnel = 0
        improved = False
        steps = 0
        while True:
            choice = moves.best()
            if choice is None:
                break
            toggle = choice[0]
            toggled = state.applyToggle(toggle)
            steps += 1
            since_best.extend(toggled)
            distance = len(toggled)
            if mode is SearchMode.NODE_WISE and direction is Direction.EXCLUDE and not state.isConnected():
                main = graph.mainComponent(state.getLinkSet())
                pruned = state.getLinkSet().difference(main).getLinks()
                for link_id in pruned:
                    state.toggleLink(link_id)
                since_best.extend(pruned)
                distance += len(pruned)
                moves.rebuild()
            else:
                moves.update(toggled)
            psi = state.psi()
            if psi < best_psi - Adaptation.EPSILON:
                best_psi = psi
                best_size = state.cardinality()
                since_best = []
                tunnel = 0
                improved = True
            else:
                tunnel += distance
                if tunnel > self.__parameter.maxTunnel(best_size):
                    break
        for link_id in reversed(since_best):
            state.toggleLink(link_id)
        return improved, steps

    def __alternate(self, state: SubgraphState) -> int:
        direction = self.__parameter.getStartDirection()
        idle_phases = 0
        steps = 0
        while idle_phases < 2:
            improved, phase_steps = self.greedyPhase(state, direction)
            steps += phase_steps
            if improved:
                idle_phases = 0
            else:
                idle_phases += 1
            direction = direction.opposite()
        return steps

    def __adaptAll(self,
                   seed: SubgraphState,
                   memo: dict) -> tuple:
        graph = seed.getGraph()
        if seed.isConnected():
            state = seed.clone()
        else:
            state = SubgraphState(graph, graph.mainComponent(seed.getLinkSet()))
        start = state.getLinkSet().copy()
        memo[start] = None
        steps = self.__alternate(state)
        fragmented = not state.isConnected()
        results, more_steps = self.__fragments(state, memo)
        memo[start] = results
        return results, steps + more_steps, fragmented

    def __fragments(self,
                    state: SubgraphState,
                    memo: dict) -> tuple:
        if state.isConnected():
            return [state], 0
        graph = state.getGraph()
        components = graph.components(state.getLinkSet())
        if self.__parameter.getMode() is SearchMode.NODE_WISE:
            return [SubgraphState(graph, components[0])], 0
        logger.debug("Adapted subgraph fell apart into %d components", len(components))
        results = []
        seen = set()
        steps = 0
        for component in components:
            if component in memo:
                found = memo[component]
                if found is None:
                    continue
            else:
                found, component_steps, _ = self.__adaptAll(SubgraphState(graph, component), memo)
                steps += component_steps
            for result in found:
                if result.getLinkSet() not in seen:
                    seen.add(result.getLinkSet().copy())
                    results.append(result)
        if len(results) == 0:
            results.append(SubgraphState(graph, components[0]))
        return results, steps

    def handleFragmentation(self, state: SubgraphState) -> list:
        """
        Turns the outcome of a search into connected local optima. A connected state is returned unchanged. In
        node-wise mode the main component of an unconnected state is kept; in link-wise mode every component is
        adapted again, recursively, until all results are connected.

        PARAMETERS
        ----------
        state : SubgraphState
            Outcome of a search.

        RETURNS
        -------
        list
            Connected states.
        """
        results, steps = self.__fragments(state, {})
        return results

    def adapt(self, seed: SubgraphState) -> AdaptationResult:
        """
        Adapts a seed to a connected local optimum of the move space. An unconnected seed is replaced by its main
        component first. Phases alternate until two of them in a row bring no improvement. If the link-wise search
        ends in an unconnected subgraph, its components are adapted separately and the lowest result is returned.

        PARAMETERS
        ----------
        seed : SubgraphState
            Nonempty start subgraph, left unchanged.

        RETURNS
        -------
        AdaptationResult
            Lowest connected result with the fragments spawned on the way.
        """
        if seed.isEmpty():
            raise EmptySeed("Adaptation needs a nonempty seed")
        results, steps, fragmented = self.__adaptAll(seed, {})
        best = min(results, key=lambda result: (result.psi(), result.getLinkSet().getLinks()))
        return AdaptationResult(best, steps, fragmented, [result.getLinkSet().copy() for result in results])

    @staticmethod
    def rangeCheck(state: SubgraphState, resolution: Resolution) -> int:
        """
        Scans all places at distance one, the empty subgraph and the whole graph included, for a place of lower
        cost.

        PARAMETERS
        ----------
        state : SubgraphState
            Nonempty state.
        resolution : Resolution
            Resolution whose minimal range is claimed when no lower neighbour exists.

        RETURNS
        -------
        int
            1 if a neighbour has lower cost, otherwise the minimal range of the resolution for the state's size.
        """
        links = state.getLinkSet()
        for link_id in range(state.getGraph().linkCount()):
            if links.contains(link_id):
                delta = state.deltaPsiLink(link_id, Direction.EXCLUDE)
            else:
                delta = state.deltaPsiLink(link_id, Direction.INCLUDE)
            if delta < -Adaptation.EPSILON:
                return 1
        return resolution.minimalRange(state.cardinality())

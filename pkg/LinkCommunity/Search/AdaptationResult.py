from LinkCommunity.Cost.SubgraphState import SubgraphState


class AdaptationResult(object):

    __community: SubgraphState
    __psi: float
    __steps_taken: int
    __fragmented: bool
    __components_spawned: list

    def __init__(self,
                 community: SubgraphState,
                 stepsTaken: int,
                 fragmented: bool,
                 componentsSpawned: list):
        """
        Outcome of an adaptation.

        PARAMETERS
        ----------
        community : SubgraphState
            Connected subgraph of lowest cost reached.
        stepsTaken : int
            Number of moves applied, rolled back tunnel moves included.
        fragmented : bool
            True, if the search ended in an unconnected subgraph whose components were adapted separately.
        componentsSpawned : list
            Link sets of all connected results of the component searches, the community included.
        """
        self.__community = community
        self.__psi = community.psi()
        self.__steps_taken = stepsTaken
        self.__fragmented = fragmented
        self.__components_spawned = componentsSpawned

    def getCommunity(self) -> SubgraphState:
        return self.__community

    def getPsi(self) -> float:
        return self.__psi

    def getStepsTaken(self) -> int:
        return self.__steps_taken

    def isFragmented(self) -> bool:
        return self.__fragmented

    def getComponentsSpawned(self) -> list:
        return self.__components_spawned

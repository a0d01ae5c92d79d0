from LinkCommunity.Parameter.AdaptationParameter import AdaptationParameter
from LinkCommunity.Parameter.Direction import Direction
from LinkCommunity.Parameter.InvalidParameter import InvalidParameter
from LinkCommunity.Parameter.LinkWiseStrategy import LinkWiseStrategy
from LinkCommunity.Parameter.Parameter import Parameter
from LinkCommunity.Parameter.Resolution import Resolution
from LinkCommunity.Parameter.SearchMode import SearchMode


class EvolutionParameter(Parameter):

    __population_size: int
    __variance_low: float
    __variance_high: float
    __max_best_age: int
    __innovation_window: int
    __innovation_threshold: float
    __resolution: Resolution
    __crossover_partners: int
    __mutants_per_generation: int
    __threads: int
    __link_wise_strategy: LinkWiseStrategy
    __start_direction: Direction

    def __init__(self,
                 seed: int,
                 resolution: Resolution = None,
                 populationSize: int = 20,
                 varianceLow: float = 0.1,
                 varianceHigh: float = 0.5,
                 maxBestAge: int = 30,
                 innovationWindow: int = 10,
                 innovationThreshold: float = 0.2,
                 crossoverPartners: int = 3,
                 mutantsPerGeneration: int = 5,
                 threads: int = 1,
                 linkWiseStrategy: LinkWiseStrategy = LinkWiseStrategy.ADAPT_ONLY,
                 startDirection: Direction = Direction.INCLUDE):
        """
        Parameters of the memetic evolution and of the detection pipeline built on it.

        PARAMETERS
        ----------
        seed : int
            Seed of all random streams of a run.
        resolution : Resolution
            Resolution of the search, relative 0.1 if not given.
        populationSize : int
            Number of communities kept in a population.
        varianceLow : float
            Mutation variance used in every generation.
        varianceHigh : float
            Mutation variance used for initialisation and renewal.
        maxBestAge : int
            Evolution stops when the best community did not change for more generations than this.
        innovationWindow : int
            Number of generations over which the innovation rate is measured; also the staleness that triggers a
            renewal.
        innovationThreshold : float
            Renewal fires when the innovation rate falls below this fraction.
        crossoverPartners : int
            Number of random partners the best community is crossed with per generation.
        mutantsPerGeneration : int
            Number of low variance mutants of the best community per generation.
        threads : int
            Number of worker threads adapting mutants and offspring of a generation. Adaptation is pure Python, so
            threads only run in parallel on an interpreter without the global interpreter lock; results are the
            same for every thread count.
        linkWiseStrategy : LinkWiseStrategy
            Link-wise memetic evolution or link-wise adaptation only after the node-wise stage.
        startDirection : Direction
            Direction of the first greedy phase of every adaptation.
        """
        super().__init__(seed)
        if resolution is None:
            resolution = Resolution(relative=0.1)
        for name, value in (("population size", populationSize), ("maximal best age", maxBestAge),
                            ("innovation window", innovationWindow), ("crossover partners", crossoverPartners),
                            ("mutants per generation", mutantsPerGeneration), ("threads", threads)):
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InvalidParameter("The " + name + " must be a positive integer, got " + str(value))
        if not 0.0 < varianceLow < 1.0 or not 0.0 < varianceHigh < 1.0:
            raise InvalidParameter("Mutation variances must lie in (0, 1)")
        if varianceLow >= varianceHigh:
            raise InvalidParameter("Low variance must be smaller than high variance")
        if not 0.0 <= innovationThreshold <= 1.0:
            raise InvalidParameter("Innovation threshold must lie in [0, 1], got " + str(innovationThreshold))
        if not isinstance(linkWiseStrategy, LinkWiseStrategy):
            raise InvalidParameter("Unknown link-wise strategy " + str(linkWiseStrategy))
        self.__resolution = resolution
        self.__population_size = populationSize
        self.__variance_low = varianceLow
        self.__variance_high = varianceHigh
        self.__max_best_age = maxBestAge
        self.__innovation_window = innovationWindow
        self.__innovation_threshold = innovationThreshold
        self.__crossover_partners = crossoverPartners
        self.__mutants_per_generation = mutantsPerGeneration
        self.__threads = threads
        self.__link_wise_strategy = linkWiseStrategy
        self.__start_direction = startDirection

    def getResolution(self) -> Resolution:
        return self.__resolution

    def getPopulationSize(self) -> int:
        return self.__population_size

    def getVarianceLow(self) -> float:
        return self.__variance_low

    def getVarianceHigh(self) -> float:
        return self.__variance_high

    def getMaxBestAge(self) -> int:
        return self.__max_best_age

    def getInnovationWindow(self) -> int:
        return self.__innovation_window

    def getInnovationThreshold(self) -> float:
        return self.__innovation_threshold

    def getCrossoverPartners(self) -> int:
        return self.__crossover_partners

    def getMutantsPerGeneration(self) -> int:
        return self.__mutants_per_generation

    def getThreads(self) -> int:
        return self.__threads

    def getLinkWiseStrategy(self) -> LinkWiseStrategy:
        return self.__link_wise_strategy

    def adaptationParameter(self, mode: SearchMode) -> AdaptationParameter:
        """
        Creates the parameters of the local searches run inside an evolution in the given mode.

        PARAMETERS
        ----------
        mode : SearchMode
            Node-wise or link-wise search.

        RETURNS
        -------
        AdaptationParameter
            Adaptation parameters sharing this resolution and start direction.
        """
        return AdaptationParameter(mode, self.__resolution, self.__start_direction)

    def toDict(self) -> dict:
        """
        Echoes every parameter, enough to repeat a run.

        RETURNS
        -------
        dict
            Parameter names mapped to their values.
        """
        return {"seed": self.getSeed(),
                "resolution": self.__resolution.toDict(),
                "population_size": self.__population_size,
                "variance_low": self.__variance_low,
                "variance_high": self.__variance_high,
                "max_best_age": self.__max_best_age,
                "innovation_window": self.__innovation_window,
                "innovation_threshold": self.__innovation_threshold,
                "crossover_partners": self.__crossover_partners,
                "mutants_per_generation": self.__mutants_per_generation,
                "threads": self.__threads,
                "linkwise": self.__link_wise_strategy.name.lower(),
                "start_direction": self.__start_direction.name.lower()}

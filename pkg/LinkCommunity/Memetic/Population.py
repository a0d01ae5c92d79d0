from collections import deque

from LinkCommunity.Memetic.AlreadyCrossed import AlreadyCrossed
from LinkCommunity.Memetic.Community import Community
from LinkCommunity.Memetic.DegenerateParents import DegenerateParents
from LinkCommunity.Parameter.Resolution import Resolution


class Population(object):

    __members: list
    __population_size: int
    __resolution: Resolution
    __best_age: int
    __crossed_pairs: set
    __seed_pool: list
    __history: deque
    __renewed: bool

    def __init__(self,
                 populationSize: int,
                 resolution: Resolution,
                 innovationWindow: int):
        """
        Distinct communities ordered by cost, the first being the best. Besides the members the population keeps
        the pairs already crossed, the communities deselected because they lie outside the minimal range of the best
        one, and the admission counts of the last generations.

        PARAMETERS
        ----------
        populationSize : int
            Maximal number of members.
        resolution : Resolution
            Resolution giving the minimal range around the best community.
        innovationWindow : int
            Number of generations the innovation rate is measured over.
        """
        self.__members = []
        self.__population_size = populationSize
        self.__resolution = resolution
        self.__best_age = 0
        self.__crossed_pairs = set()
        self.__seed_pool = []
        self.__history = deque(maxlen=innovationWindow)
        self.__renewed = False

    def getMembers(self) -> list:
        return self.__members

    def getBest(self) -> Community:
        return self.__members[0]

    def getBestAge(self) -> int:
        return self.__best_age

    def getSeedPool(self) -> list:
        return self.__seed_pool

    def size(self) -> int:
        return len(self.__members)

    def contains(self, community: Community) -> bool:
        return community in self.__members

    def select(self, candidates: list) -> int:
        """
        Merges adapted candidates into the population and keeps the lowest ones. A candidate that would sort ahead
        of the best member replaces it only if it lies within the minimal range of the best member; otherwise it is
        deselected into the seed pool. Duplicates of members are ignored.

        PARAMETERS
        ----------
        candidates : list
            Connected Communities.

        RETURNS
        -------
        int
            Number of candidates that are members after the selection.
        """
        fresh = []
        for candidate in sorted(candidates, key=lambda community: community.sortKey()):
            if candidate not in self.__members and candidate not in fresh:
                fresh.append(candidate)
        old_best = self.__members[0] if len(self.__members) > 0 else None
        admitted = []
        for candidate in fresh:
            if len(self.__members) > 0:
                best = self.__members[0]
                if candidate.sortKey() < best.sortKey() and \
                        candidate.distance(best) >= self.__resolution.minimalRange(best.size()):
                    if candidate not in self.__seed_pool:
                        self.__seed_pool.append(candidate)
                    continue
            self.__members.append(candidate)
            self.__members.sort(key=lambda community: community.sortKey())
            admitted.append(candidate)
        del self.__members[self.__population_size:]
        if old_best is not None and self.__members[0] != old_best:
            self.__best_age = 0
            self.__renewed = False
        return sum(1 for candidate in admitted if candidate in self.__members)

    def endGeneration(self, admitted: int, generated: int):
        """
        Records the admissions of a finished generation and ages the best community.

        PARAMETERS
        ----------
        admitted : int
            Number of candidates that became members.
        generated : int
            Number of candidates produced.
        """
        self.__history.append((admitted, generated))
        self.__best_age += 1

    def innovationRate(self) -> float:
        """
        Returns the fraction of candidates that became members over the innovation window.
        """
        generated = sum(entry[1] for entry in self.__history)
        if generated == 0:
            return 0.0
        return sum(entry[0] for entry in self.__history) / generated

    def needsRenewal(self, staleness: int, threshold: float) -> bool:
        """
        Checks whether the best community is stale and the innovation rate low, at most once per staleness
        episode.

        PARAMETERS
        ----------
        staleness : int
            Best age from which the population counts as stale.
        threshold : float
            Innovation rate below which the population is renewed.

        RETURNS
        -------
        bool
            True, if a renewal is due.
        """
        return not self.__renewed and self.__best_age >= staleness and self.innovationRate() < threshold

    def markRenewed(self):
        self.__renewed = True

    @staticmethod
    def __fingerprint(first: Community, second: Community) -> frozenset:
        return frozenset((first.getLinks(), second.getLinks()))

    def isCrossed(self, first: Community, second: Community) -> bool:
        return Population.__fingerprint(first, second) in self.__crossed_pairs

    def checkCrossable(self, first: Community, second: Community):
        """
        Raises DegenerateParents if one community contains the other and AlreadyCrossed if the pair was crossed
        before.
        """
        if first.getLinks().isSubsetOf(second.getLinks()) or second.getLinks().isSubsetOf(first.getLinks()):
            raise DegenerateParents("One parent is part of the other")
        if self.isCrossed(first, second):
            raise AlreadyCrossed("The parents were crossed before")

    def markCrossed(self, first: Community, second: Community):
        self.__crossed_pairs.add(Population.__fingerprint(first, second))

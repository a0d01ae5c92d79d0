import numpy as np

from LinkCommunity.Parameter.InvalidParameter import InvalidParameter


class Parameter(object):

    __seed: int

    def __init__(self, seed: int):
        """
        Base of the parameters of a randomized search. The seed fixes every random stream of a run, so two runs
        with equal parameters give equal results.

        PARAMETERS
        ----------
        seed : int
            Non-negative seed of the random streams.
        """
        if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise InvalidParameter("Seed must be a non-negative integer, got " + str(seed))
        self.__seed = seed

    def getSeed(self) -> int:
        return self.__seed

    def randomStream(self, *keys) -> np.random.Generator:
        """
        Returns the random stream identified by the given keys. Streams of different keys are independent, and the
        same keys always give the same stream for the same seed.

        PARAMETERS
        ----------
        keys : int
            Non-negative integers naming the stream, e.g. the evolution, the generation and the slot in it.

        RETURNS
        -------
        np.random.Generator
            Generator seeded with the seed followed by the keys.
        """
        return np.random.default_rng([self.__seed] + list(keys))

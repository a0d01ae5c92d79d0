import math

from LinkCommunity.Parameter.InvalidParameter import InvalidParameter


class Resolution(object):

    __absolute: int
    __relative: float

    def __init__(self,
                 absolute: int = None,
                 relative: float = None):
        """
        Resolution of a community search, the minimal range a community must have to be accepted. Exactly one of
        absolute (a number of links) or relative (a fraction of the community size) must be given.

        PARAMETERS
        ----------
        absolute : int
            Minimal range as a link count, at least 1.
        relative : float
            Minimal range as a fraction of the community size, strictly between 0 and 1.
        """
        if (absolute is None) == (relative is None):
            raise InvalidParameter("Exactly one of absolute or relative resolution must be given")
        if absolute is not None and (isinstance(absolute, bool) or not isinstance(absolute, int) or absolute < 1):
            raise InvalidParameter("Absolute resolution must be a positive integer, got " + str(absolute))
        if relative is not None and not 0.0 < relative < 1.0:
            raise InvalidParameter("Relative resolution must lie in (0, 1), got " + str(relative))
        self.__absolute = absolute
        self.__relative = relative

    def isRelative(self) -> bool:
        return self.__relative is not None

    def getValue(self):
        """
        Returns the configured value, an int for absolute and a float for relative resolutions.
        """
        if self.__relative is not None:
            return self.__relative
        return self.__absolute

    def __rawRange(self, size: int) -> int:
        if self.__relative is not None:
            return math.ceil(self.__relative * size)
        return self.__absolute

    def maxTunnel(self, size: int) -> int:
        """
        Returns the maximal number of links a greedy search may toggle uphill before it has to reach a place lower
        than the best one seen.

        PARAMETERS
        ----------
        size : int
            Number of links of the community the search currently holds.

        RETURNS
        -------
        int
            Resolution minus one, never negative.
        """
        return max(0, self.__rawRange(size) - 1)

    def minimalRange(self, size: int) -> int:
        """
        Returns the minimal range a community of the given size needs to be a valid result. A community is a local
        minimum, so the value is never below 2.

        PARAMETERS
        ----------
        size : int
            Number of links of the community.

        RETURNS
        -------
        int
            Minimal accepted range.
        """
        return max(2, self.__rawRange(size))

    def toDict(self) -> dict:
        if self.__relative is not None:
            return {"relative": self.__relative}
        return {"absolute": self.__absolute}

    def __eq__(self, other) -> bool:
        return isinstance(other, Resolution) and self.toDict() == other.toDict()

    def __repr__(self) -> str:
        return "Resolution(" + str(self.toDict()) + ")"

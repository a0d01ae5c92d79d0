from LinkCommunity.Parameter.Direction import Direction
from LinkCommunity.Parameter.InvalidParameter import InvalidParameter
from LinkCommunity.Parameter.Resolution import Resolution
from LinkCommunity.Parameter.SearchMode import SearchMode


class AdaptationParameter(object):

    __mode: SearchMode
    __resolution: Resolution
    __start_direction: Direction

    def __init__(self,
                 mode: SearchMode,
                 resolution: Resolution,
                 startDirection: Direction = Direction.INCLUDE):
        """
        Parameters of the greedy local search (adaptation).

        PARAMETERS
        ----------
        mode : SearchMode
            Node-wise or link-wise moves.
        resolution : Resolution
            Resolution bounding the length of tunnels through cost barriers.
        startDirection : Direction
            Direction of the first greedy phase.
        """
        if not isinstance(mode, SearchMode):
            raise InvalidParameter("Unknown search mode " + str(mode))
        if not isinstance(startDirection, Direction):
            raise InvalidParameter("Unknown start direction " + str(startDirection))
        self.__mode = mode
        self.__resolution = resolution
        self.__start_direction = startDirection

    def getMode(self) -> SearchMode:
        return self.__mode

    def getResolution(self) -> Resolution:
        return self.__resolution

    def getStartDirection(self) -> Direction:
        return self.__start_direction

    def maxTunnel(self, size: int) -> int:
        """
        Accessor for the tunnel length allowed around a community of the given size.

        PARAMETERS
        ----------
        size : int
            Number of links of the community.

        RETURNS
        -------
        int
            Maximal number of uphill links.
        """
        return self.__resolution.maxTunnel(size)

    def withMode(self, mode: SearchMode):
        """
        Returns a copy of these parameters searching in the given mode.
        """
        return AdaptationParameter(mode, self.__resolution, self.__start_direction)

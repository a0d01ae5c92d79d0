from LinkCommunity.Parameter.Direction import Direction
from LinkCommunity.Parameter.SearchMode import SearchMode


class Toggle(object):

    __mode: SearchMode
    __element: int
    __direction: Direction

    def __init__(self,
                 mode: SearchMode,
                 element: int,
                 direction: Direction):
        """
        A move in the cost landscape: including or excluding one link (link-wise) or one node with all its links
        into the subgraph (node-wise).

        PARAMETERS
        ----------
        mode : SearchMode
            Whether element is a link id or a node id.
        element : int
            Link or node id.
        direction : Direction
            Include or exclude.
        """
        self.__mode = mode
        self.__element = element
        self.__direction = direction

    def getMode(self) -> SearchMode:
        return self.__mode

    def getElement(self) -> int:
        return self.__element

    def getDirection(self) -> Direction:
        return self.__direction

    def isNodeMove(self) -> bool:
        return self.__mode is SearchMode.NODE_WISE

    def __eq__(self, other) -> bool:
        return isinstance(other, Toggle) and (self.__mode, self.__element, self.__direction) == \
            (other.__mode, other.__element, other.__direction)

    def __hash__(self) -> int:
        return hash((self.__mode, self.__element, self.__direction))

    def __repr__(self) -> str:
        return "Toggle(" + self.__mode.name + ", " + str(self.__element) + ", " + self.__direction.name + ")"

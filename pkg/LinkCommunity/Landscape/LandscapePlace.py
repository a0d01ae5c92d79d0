from LinkCommunity.Graph.LinkSet import LinkSet


class LandscapePlace(object):

    __index: int
    __links: LinkSet
    __psi: float
    __connected: bool

    def __init__(self,
                 index: int,
                 links: LinkSet,
                 psi: float,
                 connected: bool):
        """
        A place of the cost landscape, one link-induced subgraph with its cost.

        PARAMETERS
        ----------
        index : int
            Membership bit vector of the place, bit k set for link k.
        links : LinkSet
            Links of the subgraph.
        psi : float
            Cost of the subgraph.
        connected : bool
            True, if the subgraph is connected.
        """
        self.__index = index
        self.__links = links
        self.__psi = psi
        self.__connected = connected

    def getIndex(self) -> int:
        return self.__index

    def getLinks(self) -> LinkSet:
        return self.__links

    def getPsi(self) -> float:
        return self.__psi

    def isConnected(self) -> bool:
        return self.__connected

    def size(self) -> int:
        return self.__links.cardinality()

    def toDict(self) -> dict:
        return {"link_numbers": [link_id + 1 for link_id in self.__links],
                "psi": float('%.12g' % self.__psi),
                "connected": self.__connected,
                "size": self.size()}

from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Graph.LinkSet import LinkSet


class CommunityRecord(object):

    __links: LinkSet
    __psi: float
    __range: int
    __exact: bool
    __local_minimum: bool

    def __init__(self,
                 links: LinkSet,
                 psi: float,
                 rangeValue: int,
                 exact: bool,
                 localMinimum: bool = True):
        """
        A community as reported by the landscape oracle or by a search.

        PARAMETERS
        ----------
        links : LinkSet
            Links of the community.
        psi : float
            Cost of the community.
        rangeValue : int
            Exact range found by enumeration, or the lower bound of the range proven by a search.
        exact : bool
            True for an exact range.
        localMinimum : bool
            True, if no place at distance one is lower.
        """
        self.__links = links
        self.__psi = psi
        self.__range = rangeValue
        self.__exact = exact
        self.__local_minimum = localMinimum

    def getLinks(self) -> LinkSet:
        return self.__links

    def getPsi(self) -> float:
        return self.__psi

    def getRange(self) -> int:
        return self.__range

    def isExact(self) -> bool:
        return self.__exact

    def isLocalMinimum(self) -> bool:
        return self.__local_minimum

    def size(self) -> int:
        return self.__links.cardinality()

    def toDict(self, graph: Graph) -> dict:
        """
        Serializes the record with the original node labels of its links. Link numbers count from 1 in input
        order. The cost is rounded to 12 significant digits.

        PARAMETERS
        ----------
        graph : Graph
            Graph the community lives in.

        RETURNS
        -------
        dict
            JSON ready record.
        """
        result = {"links": [list(graph.linkLabels(link_id)) for link_id in self.__links],
                  "link_numbers": [link_id + 1 for link_id in self.__links],
                  "psi": float('%.12g' % self.__psi),
                  "size": self.size(),
                  "local_minimum": self.__local_minimum}
        if self.__exact:
            result["range"] = self.__range
        else:
            result["range_lower_bound"] = self.__range
        return result

    @staticmethod
    def fromDict(data: dict, linkCount: int):
        """
        Reads a record written by toDict. The links are taken from the 1-based link numbers.
        """
        links = LinkSet(linkCount, [number - 1 for number in data["link_numbers"]])
        if "range" in data:
            return CommunityRecord(links, data["psi"], data["range"], True, data.get("local_minimum", True))
        return CommunityRecord(links, data["psi"], data.get("range_lower_bound", 0), False,
                               data.get("local_minimum", True))

    def __repr__(self) -> str:
        return "CommunityRecord(" + str(self.__links.getLinks()) + ", psi=" + str(self.__psi) + ")"

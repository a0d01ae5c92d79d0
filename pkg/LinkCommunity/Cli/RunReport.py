from DataStructure.CounterHashMap import CounterHashMap

from LinkCommunity.Graph.Graph import Graph

SCHEMA = 1


class RunReport(object):

    __graph: Graph
    __config: dict
    __communities: list
    __timing: dict

    def __init__(self,
                 graph: Graph,
                 config: dict,
                 communities: list,
                 timing: dict):
        """
        Result of a detection run: graph summary, the echoed configuration, the communities with their original
        edge labels, the pairwise overlaps and the wall-clock time of every phase.

        PARAMETERS
        ----------
        graph : Graph
            Graph searched.
        config : dict
            Parameters of the run, enough to repeat it.
        communities : list
            Detected Communities.
        timing : dict
            Seconds spent per phase.
        """
        self.__graph = graph
        self.__config = config
        self.__communities = communities
        self.__timing = timing

    @staticmethod
    def graphSummary(graph: Graph) -> dict:
        return {"nodes": graph.nodeCount(),
                "links": graph.linkCount(),
                "fingerprint": graph.fingerprint()}

    def overlapMatrix(self) -> list:
        """
        Returns the number of links shared by every pair of communities, the sizes on the diagonal.
        """
        return [[first.getLinks().intersection(second.getLinks()).cardinality() for second in self.__communities]
                for first in self.__communities]

    def linkMembership(self) -> list:
        """
        Counts for every link how many communities contain it. Links of no community are left out.

        RETURNS
        -------
        list
            Records of link labels, 1-based link number and community count, in link order.
        """
        counts = CounterHashMap()
        for community in self.__communities:
            for link_id in community.getLinks():
                counts.put(link_id)
        result = []
        for link_id in range(self.__graph.linkCount()):
            if link_id in counts:
                result.append({"link": list(self.__graph.linkLabels(link_id)),
                               "link_number": link_id + 1,
                               "communities": counts[link_id]})
        return result

    def toDict(self) -> dict:
        return {"schema": SCHEMA,
                "graph": RunReport.graphSummary(self.__graph),
                "config": self.__config,
                "communities": [community.toRecord().toDict(self.__graph) for community in self.__communities],
                "overlap_matrix": self.overlapMatrix(),
                "link_membership": self.linkMembership(),
                "timing": self.__timing}

class VerificationReport(object):

    TOLERANCE = 1e-9

    __matched: list
    __missed: list
    __spurious: list
    __psi_discrepancies: list

    def __init__(self,
                 found: list,
                 oracle: list):
        """
        Compares the communities found by a search with the local minima of the exhaustive landscape by exact link
        set equality. Every spurious community is reported with its distance to the nearest oracle minimum, and every
        matched community whose cost differs from the oracle value is listed as a discrepancy.

        PARAMETERS
        ----------
        found : list
            CommunityRecords of a search.
        oracle : list
            CommunityRecords of the landscape local minima.
        """
        oracle_by_links = {record.getLinks(): record for record in oracle}
        found_links = set()
        self.__matched = []
        self.__spurious = []
        self.__psi_discrepancies = []
        for record in found:
            links = record.getLinks()
            found_links.add(links)
            if links in oracle_by_links:
                expected = oracle_by_links[links]
                self.__matched.append(expected)
                if abs(record.getPsi() - expected.getPsi()) > VerificationReport.TOLERANCE:
                    self.__psi_discrepancies.append((record, expected.getPsi()))
            else:
                if len(oracle) > 0:
                    distance = min(links.symmetricDifferenceDistance(minimum.getLinks()) for minimum in oracle)
                else:
                    distance = links.universeSize() + 1
                self.__spurious.append((record, distance))
        self.__missed = [record for record in oracle if record.getLinks() not in found_links]

    def getMatched(self) -> list:
        return self.__matched

    def getMissed(self) -> list:
        return self.__missed

    def getSpurious(self) -> list:
        """
        Returns (record, distance to the nearest oracle minimum) pairs.
        """
        return self.__spurious

    def getPsiDiscrepancies(self) -> list:
        return self.__psi_discrepancies

    def isSuccessful(self) -> bool:
        return len(self.__missed) == 0 and len(self.__spurious) == 0

    @staticmethod
    def __numbers(record) -> list:
        return [link_id + 1 for link_id in record.getLinks()]

    def toDict(self) -> dict:
        """
        Serializes the comparison with 1-based link numbers.
        """
        return {"matched": len(self.__matched),
                "missed": [VerificationReport.__numbers(record) for record in self.__missed],
                "spurious": [{"link_numbers": VerificationReport.__numbers(record),
                              "psi": record.getPsi(),
                              "nearest_minimum_distance": distance}
                             for record, distance in self.__spurious],
                "psi_discrepancies": [{"link_numbers": VerificationReport.__numbers(record),
                                       "psi": record.getPsi(),
                                       "oracle_psi": psi}
                                      for record, psi in self.__psi_discrepancies],
                "successful": self.isSuccessful()}

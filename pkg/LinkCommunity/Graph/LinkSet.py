from __future__ import annotations

from typing import Iterable, Iterator

from LinkCommunity.Graph.SizeMismatch import SizeMismatch


class LinkSet(object):

    __size: int
    __bits: int
    __cardinality: int

    def __init__(self,
                 size: int,
                 links: Iterable[int] = None,
                 bits: int = None):
        """
        Creates a set of link ids of a graph with size links. The membership of link k is bit k of an integer, so
        set operations work a machine word at a time.

        PARAMETERS
        ----------
        size : int
            Number of links m of the graph, the universe of the set.
        links : Iterable[int]
            Link ids put into the set.
        bits : int
            Membership bit vector, used instead of links.
        """
        self.__size = size
        self.__bits = 0
        if bits is not None:
            if bits < 0 or bits >> size:
                raise IndexError("Bit vector does not fit into " + str(size) + " links")
            self.__bits = bits
        elif links is not None:
            for link in links:
                self.__check(link)
                self.__bits |= 1 << link
        self.__cardinality = bin(self.__bits).count("1")

    @staticmethod
    def full(size: int) -> LinkSet:
        """
        Returns the set of all links E of a graph with size links.
        """
        return LinkSet(size, bits=(1 << size) - 1)

    def __check(self, link: int):
        if link < 0 or link >= self.__size:
            raise IndexError("Link id " + str(link) + " out of range 0.." + str(self.__size - 1))

    def __checkSize(self, other: LinkSet):
        if self.__size != other.__size:
            raise SizeMismatch("Link sets over " + str(self.__size) + " and " + str(other.__size) + " links")

    def universeSize(self) -> int:
        return self.__size

    def cardinality(self) -> int:
        """
        Accessor for the number of links |L| in the set.

        RETURNS
        -------
        int
            Number of links in the set.
        """
        return self.__cardinality

    def getBits(self) -> int:
        return self.__bits

    def isEmpty(self) -> bool:
        return self.__cardinality == 0

    def isFull(self) -> bool:
        return self.__cardinality == self.__size

    def contains(self, link: int) -> bool:
        return (self.__bits >> link) & 1 == 1

    def add(self, link: int):
        self.__check(link)
        if not self.contains(link):
            self.__bits |= 1 << link
            self.__cardinality += 1

    def remove(self, link: int):
        self.__check(link)
        if self.contains(link):
            self.__bits &= ~(1 << link)
            self.__cardinality -= 1

    def toggle(self, link: int) -> bool:
        """
        Adds the link if it is missing and removes it otherwise.

        PARAMETERS
        ----------
        link : int
            Link id to toggle.

        RETURNS
        -------
        bool
            True, if the link is in the set after the toggle.
        """
        self.__check(link)
        self.__bits ^= 1 << link
        if self.contains(link):
            self.__cardinality += 1
            return True
        self.__cardinality -= 1
        return False

    def intersection(self, other: LinkSet) -> LinkSet:
        self.__checkSize(other)
        return LinkSet(self.__size, bits=self.__bits & other.__bits)

    def union(self, other: LinkSet) -> LinkSet:
        self.__checkSize(other)
        return LinkSet(self.__size, bits=self.__bits | other.__bits)

    def difference(self, other: LinkSet) -> LinkSet:
        self.__checkSize(other)
        return LinkSet(self.__size, bits=self.__bits & ~other.__bits)

    def symmetricDifference(self, other: LinkSet) -> LinkSet:
        self.__checkSize(other)
        return LinkSet(self.__size, bits=self.__bits ^ other.__bits)

    def complement(self) -> LinkSet:
        """
        Returns E minus this set.
        """
        return LinkSet(self.__size, bits=((1 << self.__size) - 1) & ~self.__bits)

    def isSubsetOf(self, other: LinkSet) -> bool:
        self.__checkSize(other)
        return self.__bits & ~other.__bits == 0

    def symmetricDifferenceDistance(self, other: LinkSet) -> int:
        """
        The distance of two places in the cost landscape, the number of links that have to be added or removed to
        move from one set to the other.

        PARAMETERS
        ----------
        other : LinkSet
            Link set over the same graph.

        RETURNS
        -------
        int
            Size of the symmetric difference of the two sets.
        """
        self.__checkSize(other)
        return bin(self.__bits ^ other.__bits).count("1")

    def smallestLink(self) -> int:
        """
        Returns the smallest link id in the set, -1 for the empty set.
        """
        if self.__bits == 0:
            return -1
        return (self.__bits & -self.__bits).bit_length() - 1

    def getLinks(self) -> list:
        """
        Returns the link ids of the set in ascending order.
        """
        return list(self)

    def copy(self) -> LinkSet:
        return LinkSet(self.__size, bits=self.__bits)

    def __iter__(self) -> Iterator[int]:
        bits = self.__bits
        while bits:
            lowest = bits & -bits
            yield lowest.bit_length() - 1
            bits ^= lowest

    def __contains__(self, link: int) -> bool:
        return 0 <= link < self.__size and self.contains(link)

    def __len__(self) -> int:
        return self.__cardinality

    def __eq__(self, other) -> bool:
        return isinstance(other, LinkSet) and self.__size == other.__size and self.__bits == other.__bits

    def __hash__(self) -> int:
        return hash((self.__size, self.__bits))

    def __repr__(self) -> str:
        return "LinkSet(" + str(self.getLinks()) + ")"

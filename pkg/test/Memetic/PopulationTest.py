import unittest

from LinkCommunity.Memetic.AlreadyCrossed import AlreadyCrossed
from LinkCommunity.Memetic.Community import Community
from LinkCommunity.Memetic.DegenerateParents import DegenerateParents
from LinkCommunity.Memetic.Population import Population
from LinkCommunity.Parameter.Resolution import Resolution
from test.LinkCommunityTest import LinkCommunityTest


class PopulationTest(LinkCommunityTest):

    def community(self, psi: float, *numbers) -> Community:
        return Community(self.links(self.bowtie, *numbers), psi, 2)

    def test_Select(self):
        population = Population(3, Resolution(absolute=2), 5)
        self.assertEqual(1, population.select([self.community(0.6, 1)]))
        self.assertEqual(0.6, population.getBest().getPsi())
        admitted = population.select([self.community(0.46875, 1, 2), self.community(0.75, 2),
                                      self.community(0.75, 2), self.community(0.84375, 1, 4)])
        self.assertEqual(2, admitted)
        self.assertEqual(3, population.size())
        self.assertEqual([0.46875, 0.6, 0.75], [member.getPsi() for member in population.getMembers()])
        self.assertFalse(population.contains(self.community(0.84375, 1, 4)))

    def test_SeedPool(self):
        population = Population(5, Resolution(absolute=2), 5)
        population.select([self.community(0.6, 1)])
        far = self.community(1.0 / 3.0, 4, 5, 6)
        near = self.community(0.46875, 1, 2)
        population.select([far])
        self.assertEqual([far], population.getSeedPool())
        self.assertFalse(population.contains(far))
        population.select([near])
        self.assertEqual(near, population.getBest())

    def test_EqualCostFarAway(self):
        population = Population(5, Resolution(absolute=2), 5)
        second = self.community(1.0 / 3.0, 4, 5, 6)
        population.select([second])
        population.endGeneration(0, 1)
        population.endGeneration(0, 1)
        first = self.community(1.0 / 3.0, 1, 2, 3)
        self.assertEqual(0, population.select([first]))
        self.assertEqual(second, population.getBest())
        self.assertEqual(2, population.getBestAge())
        self.assertEqual([first], population.getSeedPool())

    def test_BestAge(self):
        population = Population(5, Resolution(absolute=2), 2)
        population.select([self.community(0.6, 1)])
        population.endGeneration(0, 4)
        population.endGeneration(0, 4)
        self.assertEqual(2, population.getBestAge())
        self.assertAlmostEqual(0.0, population.innovationRate())
        self.assertTrue(population.needsRenewal(2, 0.2))
        population.markRenewed()
        self.assertFalse(population.needsRenewal(2, 0.2))
        population.select([self.community(0.46875, 1, 2)])
        self.assertEqual(0, population.getBestAge())
        population.endGeneration(1, 2)
        self.assertAlmostEqual(1.0 / 6.0, population.innovationRate())

    def test_Crossing(self):
        population = Population(5, Resolution(absolute=2), 5)
        first = self.community(1.0 / 3.0, 1, 2, 3)
        second = self.community(1.0 / 3.0, 4, 5, 6)
        population.checkCrossable(first, second)
        population.markCrossed(first, second)
        self.assertTrue(population.isCrossed(second, first))
        self.assertRaises(AlreadyCrossed, population.checkCrossable, second, first)
        self.assertRaises(DegenerateParents, population.checkCrossable, first, self.community(0.46875, 1, 2))

    def test_Community(self):
        first = self.community(1.0 / 3.0, 1, 2, 3)
        self.assertEqual(6, first.distance(self.community(1.0 / 3.0, 4, 5, 6)))
        self.assertEqual(first, Community(self.links(self.bowtie, 1, 2, 3), 0.0, 5))
        self.assertLess(first.sortKey(), self.community(1.0 / 3.0, 4, 5, 6).sortKey())
        self.assertEqual(4, first.withRangeLowerBound(4).getRangeLowerBound())
        self.assertAlmostEqual(1.0 / 3.0, first.toState(self.bowtie).psi(), places=12)
        self.assertFalse(first.toRecord().isExact())
        self.assertTrue(first.toRecord().isLocalMinimum())
        self.assertFalse(first.withRangeLowerBound(1).toRecord().isLocalMinimum())


if __name__ == '__main__':
    unittest.main()

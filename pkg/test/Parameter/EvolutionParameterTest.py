import unittest

from LinkCommunity.Parameter.Direction import Direction
from LinkCommunity.Parameter.EvolutionParameter import EvolutionParameter
from LinkCommunity.Parameter.InvalidParameter import InvalidParameter
from LinkCommunity.Parameter.LinkWiseStrategy import LinkWiseStrategy
from LinkCommunity.Parameter.Resolution import Resolution
from LinkCommunity.Parameter.SearchMode import SearchMode


class EvolutionParameterTest(unittest.TestCase):

    def test_Defaults(self):
        parameter = EvolutionParameter(7)
        self.assertEqual(7, parameter.getSeed())
        self.assertEqual(Resolution(relative=0.1), parameter.getResolution())
        self.assertEqual(20, parameter.getPopulationSize())
        self.assertAlmostEqual(0.1, parameter.getVarianceLow())
        self.assertAlmostEqual(0.5, parameter.getVarianceHigh())
        self.assertEqual(30, parameter.getMaxBestAge())
        self.assertEqual(10, parameter.getInnovationWindow())
        self.assertAlmostEqual(0.2, parameter.getInnovationThreshold())
        self.assertEqual(3, parameter.getCrossoverPartners())
        self.assertEqual(5, parameter.getMutantsPerGeneration())
        self.assertEqual(1, parameter.getThreads())
        self.assertIs(LinkWiseStrategy.ADAPT_ONLY, parameter.getLinkWiseStrategy())

    def test_Invalid(self):
        self.assertRaises(InvalidParameter, EvolutionParameter, -1)
        self.assertRaises(InvalidParameter, EvolutionParameter, 1, None, 0)
        self.assertRaises(InvalidParameter, EvolutionParameter, 1, varianceLow=0.6, varianceHigh=0.5)
        self.assertRaises(InvalidParameter, EvolutionParameter, 1, varianceLow=0.0)
        self.assertRaises(InvalidParameter, EvolutionParameter, 1, varianceHigh=1.0)
        self.assertRaises(InvalidParameter, EvolutionParameter, 1, threads=0)
        self.assertRaises(InvalidParameter, EvolutionParameter, 1, innovationThreshold=1.5)
        self.assertRaises(InvalidParameter, EvolutionParameter, 1, linkWiseStrategy="memetic")

    def test_AdaptationParameter(self):
        parameter = EvolutionParameter(1, Resolution(absolute=3), startDirection=Direction.EXCLUDE)
        adaptation = parameter.adaptationParameter(SearchMode.LINK_WISE)
        self.assertIs(SearchMode.LINK_WISE, adaptation.getMode())
        self.assertIs(Direction.EXCLUDE, adaptation.getStartDirection())
        self.assertEqual(2, adaptation.maxTunnel(10))
        self.assertIs(SearchMode.NODE_WISE, adaptation.withMode(SearchMode.NODE_WISE).getMode())

    def test_RandomStream(self):
        parameter = EvolutionParameter(5)
        self.assertEqual(list(parameter.randomStream(1, 2, 3).integers(100, size=5)),
                         list(EvolutionParameter(5).randomStream(1, 2, 3).integers(100, size=5)))
        self.assertNotEqual(list(parameter.randomStream(1, 2, 3).integers(1 << 30, size=5)),
                            list(parameter.randomStream(1, 2, 4).integers(1 << 30, size=5)))

    def test_ToDict(self):
        config = EvolutionParameter(42, populationSize=8, linkWiseStrategy=LinkWiseStrategy.MEMETIC).toDict()
        self.assertEqual(42, config["seed"])
        self.assertEqual(8, config["population_size"])
        self.assertEqual({"relative": 0.1}, config["resolution"])
        self.assertEqual("memetic", config["linkwise"])
        self.assertEqual("include", config["start_direction"])


if __name__ == '__main__':
    unittest.main()

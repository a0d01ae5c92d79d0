import argparse
import json
import logging
import sys
import time
from typing import Iterator

import numpy as np

from LinkCommunity.Cli.RunReport import RunReport, SCHEMA
from LinkCommunity.Graph.Graph import Graph
from LinkCommunity.Graph.GraphError import GraphError
from LinkCommunity.Landscape.CommunityRecord import CommunityRecord
from LinkCommunity.Landscape.CostLandscape import CostLandscape
from LinkCommunity.Landscape.TooLarge import TooLarge
from LinkCommunity.Landscape.VerificationReport import VerificationReport
from LinkCommunity.Memetic.CommunityDetection import CommunityDetection
from LinkCommunity.Parameter.Direction import Direction
from LinkCommunity.Parameter.EvolutionParameter import EvolutionParameter
from LinkCommunity.Parameter.InvalidParameter import InvalidParameter
from LinkCommunity.Parameter.LinkWiseStrategy import LinkWiseStrategy
from LinkCommunity.Parameter.Resolution import Resolution

EXIT_OK = 0
EXIT_IO = 1
EXIT_GRAPH = 2
EXIT_CONFIG = 3
EXIT_VERIFY = 4

logger = logging.getLogger(__name__)


class GraphMismatch(Exception):

    def __init__(self, message: str):
        super().__init__(message)


def buildParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linkcommunity",
                                     description="Overlapping link communities by memetic minimisation of the "
                                                 "ratio node-cut.")
    commands = parser.add_subparsers(dest="command", required=True)

    detect = commands.add_parser("detect", help="Detect link communities of an edge-list graph.")
    detect.add_argument("--input", required=True, help="Edge-list file.")
    detect.add_argument("--out", help="Report file, stdout if not given.")
    detect.add_argument("--seed", type=int, help="Random seed, drawn from OS entropy if not given.")
    resolution = detect.add_mutually_exclusive_group()
    resolution.add_argument("--resolution", type=float, help="Relative resolution in (0, 1), default 0.1.")
    resolution.add_argument("--resolution-abs", type=int, help="Absolute resolution in links.")
    detect.add_argument("--population", type=int, default=20, help="Population size.")
    detect.add_argument("--variance-low", type=float, default=0.1, help="Mutation variance per generation.")
    detect.add_argument("--variance-high", type=float, default=0.5, help="Mutation variance of renewals.")
    detect.add_argument("--max-stale", type=int, default=30,
                        help="Generations without a new best community before an evolution stops.")
    detect.add_argument("--innovation-window", type=int, default=10,
                        help="Generations the innovation rate is measured over, also the staleness before a renewal.")
    detect.add_argument("--innovation-threshold", type=float, default=0.2,
                        help="Innovation rate below which a stale population is renewed.")
    detect.add_argument("--crossover-partners", type=int, default=3,
                        help="Partners the best community is crossed with per generation.")
    detect.add_argument("--mutants", type=int, default=5, help="Mutants of the best community per generation.")
    detect.add_argument("--start-direction", choices=["include", "exclude"], default="include",
                        help="Direction of the first greedy phase of every adaptation.")
    detect.add_argument("--linkwise", choices=["memetic", "adapt-only"], default="adapt-only",
                        help="Refinement of the node-wise communities.")
    detect.add_argument("--threads", type=int, default=1,
                        help="Worker threads per generation, parallel only on a free-threaded interpreter.")
    detect.add_argument("--verbose", action="store_true", help="Log debug messages to stderr.")

    enumerate_command = commands.add_parser("enumerate", help="Enumerate the cost landscape of a small graph.")
    enumerate_command.add_argument("--input", required=True, help="Edge-list file with at most 24 links.")
    enumerate_command.add_argument("--out", help="Report file, stdout if not given.")
    enumerate_command.add_argument("--full", action="store_true", help="Also list every place of the landscape.")
    enumerate_command.add_argument("--verbose", action="store_true", help="Log debug messages to stderr.")

    verify = commands.add_parser("verify", help="Compare a detect report with an enumerate report.")
    verify.add_argument("--detect", required=True, help="Report of detect.")
    verify.add_argument("--oracle", required=True, help="Report of enumerate.")
    verify.add_argument("--input", help="Edge-list file both reports must belong to.")
    verify.add_argument("--out", help="Comparison file, stdout if not given.")
    verify.add_argument("--verbose", action="store_true", help="Log debug messages to stderr.")
    return parser


def writeReport(report: dict, fileName: str = None, places: Iterator[dict] = None):
    """
    Writes a report as JSON. Places are appended as a "places" list one at a time, so a landscape never has to be
    held in memory as records.

    PARAMETERS
    ----------
    report : dict
        Nonempty report.
    fileName : str
        Output file, stdout if not given.
    places : Iterator[dict]
        Place records streamed after the report fields.
    """
    if fileName is None:
        output_file = sys.stdout
    else:
        output_file = open(fileName, mode='w', encoding='utf-8')
    text = json.dumps(report, indent=2)
    if places is None:
        output_file.write(text + "\n")
    else:
        output_file.write(text[:-2] + ',\n  "places": [')
        separator = "\n    "
        for place in places:
            output_file.write(separator + json.dumps(place))
            separator = ",\n    "
        output_file.write("\n  ]\n}\n")
    if fileName is not None:
        output_file.close()


def readReport(fileName: str) -> dict:
    input_file = open(fileName, mode='r', encoding='utf-8')
    report = json.load(input_file)
    input_file.close()
    return report


def evolutionParameter(args) -> EvolutionParameter:
    """
    Builds the evolution parameters from the detect flags.

    PARAMETERS
    ----------
    args : argparse.Namespace
        Parsed flags, the seed already set.

    RETURNS
    -------
    EvolutionParameter
        Validated parameters.
    """
    if args.resolution_abs is not None:
        resolution = Resolution(absolute=args.resolution_abs)
    elif args.resolution is not None:
        resolution = Resolution(relative=args.resolution)
    else:
        resolution = Resolution(relative=0.1)
    strategy = LinkWiseStrategy.MEMETIC if args.linkwise == "memetic" else LinkWiseStrategy.ADAPT_ONLY
    return EvolutionParameter(seed=args.seed,
                              resolution=resolution,
                              populationSize=args.population,
                              varianceLow=args.variance_low,
                              varianceHigh=args.variance_high,
                              maxBestAge=args.max_stale,
                              innovationWindow=args.innovation_window,
                              innovationThreshold=args.innovation_threshold,
                              crossoverPartners=args.crossover_partners,
                              mutantsPerGeneration=args.mutants,
                              threads=args.threads,
                              linkWiseStrategy=strategy,
                              startDirection=Direction[args.start_direction.upper()])


def cmdDetect(args) -> int:
    start = time.perf_counter()
    if args.seed is None:
        args.seed = int(np.random.SeedSequence().entropy % (1 << 32))
    parameter = evolutionParameter(args)
    graph = Graph.loadGraph(args.input)
    loaded = time.perf_counter()
    communities = CommunityDetection(graph, parameter).detect()
    finished = time.perf_counter()
    timing = {"load": loaded - start, "detect": finished - loaded, "total": finished - start}
    writeReport(RunReport(graph, parameter.toDict(), communities, timing).toDict(), args.out)
    return EXIT_OK


def cmdEnumerate(args) -> int:
    start = time.perf_counter()
    graph = Graph.loadGraph(args.input)
    landscape = CostLandscape(graph)
    report = {"schema": SCHEMA,
              "graph": RunReport.graphSummary(graph),
              "minima": [record.toDict(graph) for record in landscape.localMinima()]}
    report["timing"] = {"total": time.perf_counter() - start}
    places = None
    if args.full:
        places = (place.toDict() for place in landscape.places())
    writeReport(report, args.out, places)
    return EXIT_OK


def cmdVerify(args) -> int:
    detected = readReport(args.detect)
    oracle = readReport(args.oracle)
    fingerprint = detected["graph"]["fingerprint"]
    if oracle["graph"]["fingerprint"] != fingerprint:
        raise GraphMismatch("The detect and oracle reports belong to different graphs")
    if args.input is not None and Graph.loadGraph(args.input).fingerprint() != fingerprint:
        raise GraphMismatch("The reports do not belong to " + args.input)
    link_count = detected["graph"]["links"]
    comparison = VerificationReport([CommunityRecord.fromDict(data, link_count) for data in detected["communities"]],
                                    [CommunityRecord.fromDict(data, link_count) for data in oracle["minima"]])
    result = {"schema": SCHEMA, "graph": detected["graph"]}
    result.update(comparison.toDict())
    writeReport(result, args.out)
    if comparison.isSuccessful():
        return EXIT_OK
    return EXIT_VERIFY


def main(argv: list = None) -> int:
    """
    Runs one command and converts failures into exit codes: 1 for unreadable files, 2 for invalid or too large
    graphs and reports of another graph, 3 for invalid parameters, 4 for a verification with missed or spurious
    communities. Diagnostics go to stderr.

    PARAMETERS
    ----------
    argv : list
        Command line arguments without the program name, sys.argv if not given.

    RETURNS
    -------
    int
        Exit code.
    """
    args = buildParser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logging.captureWarnings(True)
    commands = {"detect": cmdDetect, "enumerate": cmdEnumerate, "verify": cmdVerify}
    try:
        return commands[args.command](args)
    except InvalidParameter as error:
        logger.error("Invalid parameter: %s", error)
        return EXIT_CONFIG
    except (GraphError, TooLarge, GraphMismatch) as error:
        logger.error("Invalid graph: %s", error)
        return EXIT_GRAPH
    except (OSError, ValueError, KeyError) as error:
        logger.error("Cannot read input: %s", error)
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())

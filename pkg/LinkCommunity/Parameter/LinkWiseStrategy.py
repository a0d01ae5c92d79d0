from enum import Enum, auto


"""
 * Refinement applied to the communities found by the node-wise memetic search.
"""
class LinkWiseStrategy(Enum):
    MEMETIC = auto()
    ADAPT_ONLY = auto()

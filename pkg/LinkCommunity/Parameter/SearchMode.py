from enum import Enum, auto


class SearchMode(Enum):

    NODE_WISE = auto()
    LINK_WISE = auto()

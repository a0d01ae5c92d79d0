from LinkCommunity.Graph.GraphError import GraphError


class SelfLoop(GraphError):

    def __init__(self, message: str):
        super().__init__(message)

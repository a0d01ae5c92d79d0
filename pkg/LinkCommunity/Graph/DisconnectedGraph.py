from LinkCommunity.Graph.GraphError import GraphError


class DisconnectedGraph(GraphError):

    def __init__(self, message: str):
        super().__init__(message)

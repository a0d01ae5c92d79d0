from LinkCommunity.Graph.GraphError import GraphError


class MalformedLine(GraphError):

    def __init__(self, message: str):
        super().__init__(message)

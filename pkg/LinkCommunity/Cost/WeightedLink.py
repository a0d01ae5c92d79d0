def weightedLinkPsi(weight: float,
                    firstDegree: float,
                    secondDegree: float,
                    linkCount: int) -> float:
    """
    Ratio node-cut of a subgraph made of a single link of the given weight, where the degrees are the weighted
    degrees of its two end nodes. For weight 1 it is the cost of a single link of an unweighted graph; as the weight
    vanishes it tends to 1, the cost given to the empty subgraph and to the whole graph.

    PARAMETERS
    ----------
    weight : float
        Weight of the link, positive.
    firstDegree : float
        Weighted degree of the first end node.
    secondDegree : float
        Weighted degree of the second end node.
    linkCount : int
        Total link weight m of the graph.

    RETURNS
    -------
    float
        Cost of the single-link subgraph.
    """
    numerator = weight * ((firstDegree - weight) / firstDegree + (secondDegree - weight) / secondDegree)
    return numerator / (2 * weight * (1 - 2 * weight / (2 * linkCount)))

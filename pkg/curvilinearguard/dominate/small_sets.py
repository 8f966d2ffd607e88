from curvilinearguard.dominate.domination_bounds import edge_bound
from curvilinearguard.dominate.local_view import LocalFrame
from curvilinearguard.errors import OutOfRange
from curvilinearguard.trigraph.graph_splitter import (
    find_separating_diagonal,
    side_start,
)
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    TriangulationGraph,
)


def ear_tips(graph: TriangulationGraph):
    """Vertices whose only neighbours are their two boundary neighbours"""
    return [v for v, neighbours in enumerate(graph.neighbours) if len(neighbours) == 2]


def small_diag_set(graph: TriangulationGraph) -> DominatingSet:
    """
    Diagonal 2-dominating set of floor((n+1)/3) members for 3 <= n <= 7
    :param graph: triangulation graph
    :return: dominating set
    """
    n = graph.n
    if not 3 <= n <= 7:
        raise OutOfRange(f"Small diagonal sets cover 3 <= n <= 7, got n={n}")

    if n == 3:
        return DominatingSet.of(Mode.DIAGONAL, [(0, 1)])
    if n in (4, 5):
        return DominatingSet.of(Mode.DIAGONAL, graph.diagonals)
    if n == 6:
        return DominatingSet.of(Mode.DIAGONAL, _ear_flanks(graph))
    return DominatingSet.of(Mode.DIAGONAL, _two_ears(graph))


def _ear_flanks(graph: TriangulationGraph):
    # The two boundary edges next to an ear, not belonging to it
    n = graph.n
    a = ear_tips(graph)[0]
    return [((a - 2) % n, (a - 1) % n), ((a + 1) % n, (a + 2) % n)]


def _two_ears(graph: TriangulationGraph):
    n = graph.n
    first, second = ear_tips(graph)[:2]
    d1 = ((first - 1) % n, (first + 1) % n)
    d2 = ((second - 1) % n, (second + 1) % n)

    shared = set(d1) & set(d2)
    if not shared:
        return [d1, d2]

    # Boundary edge at the free end of d1 pointing away from its ear
    if (first + 1) % n in shared:
        edge = ((first - 2) % n, (first - 1) % n)
    else:
        edge = ((first + 1) % n, (first + 2) % n)
    return [edge, d2]


def small_edge_set(graph: TriangulationGraph) -> DominatingSet:
    """
    Edge 2-dominating set of floor((2n+1)/5) boundary edges for 3 <= n <= 9,
    two edges for the quadrilateral
    :param graph: triangulation graph
    :return: dominating set
    """
    n = graph.n
    if not 3 <= n <= 9:
        raise OutOfRange(f"Small edge sets cover 3 <= n <= 9, got n={n}")

    if n in (3, 4, 5, 7):
        odd = [(i, (i + 1) % n) for i in range(1, n, 2)]
        return DominatingSet.of(Mode.EDGE, odd[: edge_bound(n)])
    if n == 6:
        return DominatingSet.of(Mode.EDGE, _ear_flanks(graph))
    if n == 8:
        a = ear_tips(graph)[0]
        # Leaves the ear tip a and the vertex a+3 uncovered, never adjacent
        return DominatingSet.of(
            Mode.EDGE, [((a + i) % n, (a + i + 1) % n) for i in (1, 4, 6)]
        )
    return DominatingSet.of(Mode.EDGE, _nonagon_edges(graph))


def _nonagon_edges(graph: TriangulationGraph):
    separation = find_separating_diagonal(graph, 3)
    start = side_start(graph, separation)
    k = separation.k
    frame = LocalFrame(graph, [(start + i) % 9 for i in range(9)], pivot=k)

    if k == 3:
        apex = frame.apex(3, 9)
        if apex in (7, 8):
            frame = frame.reflect()
            apex = frame.apex(3, 9)

        if apex == 4:
            second = frame.apex(4, 9)
            if second == 8:
                second = frame.apex(4, 8)
            tail = second == 5
        else:
            tail = True

        chosen = (2, 5, 8) if tail else (0, 3, 6)
    else:
        if not frame.has(4, 8):
            frame = frame.reflect()
        chosen = (2, 5, 8)

    return [frame.edge(i, i + 1) for i in chosen]

from typing import NamedTuple

from curvilinearguard.errors import NotADiagonal, TooFewVertices
from curvilinearguard.trigraph.triangulation_graph import (
    TriangulationGraph,
    build_from_diagonals,
    edge_key,
)


class Separation(NamedTuple):
    diagonal: tuple
    k: int


def find_separating_diagonal(graph: TriangulationGraph, lam) -> Separation:
    """
    Finds the diagonal cutting off the fewest boundary edges among those
    cutting off at least lam, ties broken by the smallest label pair
    :param graph: triangulation graph
    :param lam: lower limit on the number of cut off boundary edges
    :return: diagonal and number k of boundary edges on its small side
    """
    if lam < 2 or graph.n < 2 * lam:
        raise TooFewVertices(f"Need lambda >= 2 and n >= {2 * lam}, got n={graph.n}")

    best = None
    for a, b in graph.diagonals:
        span = b - a
        for k in (span, graph.n - span):
            if k >= lam and (best is None or k < best.k):
                best = Separation((a, b), k)
    return best


def side_start(graph: TriangulationGraph, separation: Separation):
    """First vertex of the k-edge side when walking counterclockwise"""
    a, b = separation.diagonal
    return a if b - a == separation.k else b


def split_side(graph: TriangulationGraph, start, k):
    """
    Splits along the chord (start, start+k)
    :param graph: triangulation graph
    :param start: first vertex of the side
    :param k: number of boundary edges of the side
    :return: side graph on start..start+k and remainder on start+k..start, both
        labelled with the vertices of the input graph
    """
    n = graph.n
    end = (start + k) % n
    chord = edge_key(start, end)

    side_diagonals, rest_diagonals = [], []
    for diagonal in graph.diagonals:
        if diagonal == chord:
            continue
        a, b = diagonal
        pa, pb = (a - start) % n, (b - start) % n
        if pa <= k and pb <= k:
            side_diagonals.append((pa, pb))
        else:
            rest_diagonals.append(((a - end) % n, (b - end) % n))

    side = TriangulationGraph(
        k + 1, side_diagonals, [(start + i) % n for i in range(k + 1)]
    )
    rest = TriangulationGraph(
        n - k + 1, rest_diagonals, [(end + i) % n for i in range(n - k + 1)]
    )
    return side, rest


def split_along(graph: TriangulationGraph, diagonal):
    """
    Splits a graph into the two triangulation graphs sharing a diagonal
    :param graph: triangulation graph
    :param diagonal: label pair
    :return: graph on a..b and graph on b..a
    """
    a, b = edge_key(*diagonal)
    if not graph.is_diagonal(a, b):
        raise NotADiagonal(f"{(a, b)} is not a diagonal")
    return split_side(graph, a, b - a)


def glue_along(first: TriangulationGraph, second: TriangulationGraph):
    """
    Glues two labelled graphs along the pair of labels they share
    :param first: labelled triangulation graph
    :param second: labelled triangulation graph
    :return: triangulation graph on the union of the labels
    """
    shared = set(first.labels) & set(second.labels)
    n = len(set(first.labels) | set(second.labels))

    diagonals = set()
    for part in (first, second):
        for a, b in part.diagonals:
            diagonals.add(edge_key(part.label(a), part.label(b)))

    a, b = sorted(shared)
    if (b - a) % n not in (1, n - 1):
        diagonals.add((a, b))

    return build_from_diagonals(n, diagonals)


def subpolygon(graph: TriangulationGraph, vertices):
    """
    Restricts a graph to a sub-polygon that is a union of its triangles
    :param graph: triangulation graph
    :param vertices: vertices of the sub-polygon in counterclockwise order
    :return: labelled triangulation graph
    """
    position = {vertex: index for index, vertex in enumerate(vertices)}
    m = len(vertices)

    diagonals = []
    for vertex in vertices:
        for neighbour in graph.neighbours[vertex]:
            if neighbour in position and position[neighbour] > position[vertex]:
                p, q = position[vertex], position[neighbour]
                if (q - p) % m not in (1, m - 1):
                    diagonals.append((p, q))

    return TriangulationGraph(m, diagonals, list(vertices))

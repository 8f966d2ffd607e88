import random

from curvilinearguard.errors import NTooLarge, TooSmall
from curvilinearguard.trigraph.triangulation_graph import (
    TriangulationGraph,
    build_from_diagonals,
)

MAX_ENUMERATION_SIZE = 14


def fan_triangulation(n) -> TriangulationGraph:
    """
    Builds the fan triangulation with all diagonals at vertex 0
    :param n: number of vertices
    :return: triangulation graph
    """
    if n < 3:
        raise TooSmall(f"A fan needs at least 3 vertices, got {n}")
    return build_from_diagonals(n, [(0, i) for i in range(2, n - 1)])


def random_triangulation(n, seed=0) -> TriangulationGraph:
    """
    Grows a triangulation from a triangle by repeated random ear insertion:
    vertex j is placed on a uniformly chosen boundary edge, which becomes a
    diagonal. Labels follow the final boundary order.
    :param n: number of vertices
    :param seed: seed of the generator
    :return: triangulation graph
    """
    if n < 3:
        raise TooSmall(f"A triangulation needs at least 3 vertices, got {n}")

    rng = random.Random(seed)
    boundary = [0, 1, 2]
    chords = []

    for vertex in range(3, n):
        position = rng.randrange(len(boundary))
        left, right = boundary[position], boundary[(position + 1) % len(boundary)]
        chords.append((left, right))
        boundary.insert(position + 1, vertex)

    label = {vertex: index for index, vertex in enumerate(boundary)}
    return build_from_diagonals(n, [(label[a], label[b]) for a, b in chords])


def enumerate_triangulations(n):
    """
    Streams every triangulation of the convex n-gon exactly once
    :param n: number of vertices, at most 14
    :return: generator of triangulation graphs
    """
    if n < 3:
        raise TooSmall(f"A triangulation needs at least 3 vertices, got {n}")
    if n > MAX_ENUMERATION_SIZE:
        raise NTooLarge(f"Enumeration is limited to n <= {MAX_ENUMERATION_SIZE}")

    for diagonals in _triangulate_interval(0, n - 1):
        yield TriangulationGraph(n, diagonals)


def _triangulate_interval(low, high):
    # Triangulations of the sub-polygon low..high closed by the root edge (low, high)
    if high - low < 2:
        yield ()
        return

    for apex in range(low + 1, high):
        left_chord = ((low, apex),) if apex - low >= 2 else ()
        right_chord = ((apex, high),) if high - apex >= 2 else ()
        for left in _triangulate_interval(low, apex):
            for right in _triangulate_interval(apex, high):
                yield left + right + left_chord + right_chord


def catalan(m):
    value = 1
    for i in range(m):
        value = value * 2 * (2 * i + 1) // (i + 2)
    return value

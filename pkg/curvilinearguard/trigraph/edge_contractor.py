from dataclasses import dataclass
from typing import Optional

from curvilinearguard.errors import NotBoundary, TooSmall
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    TriangulationGraph,
    build_from_diagonals,
    edge_key,
)


@dataclass(frozen=True)
class MergeMap:
    # Contracted boundary edge (i, i+1) of the original graph
    endpoints: tuple
    # Third vertex of the triangle on the contracted edge
    apex: int
    # Label of the merged vertex in the contracted graph
    merged: int
    old_to_new: tuple
    new_to_old: tuple

    def edge_to_new(self, a, b) -> Optional[tuple]:
        if edge_key(a, b) == edge_key(*self.endpoints):
            return None
        return edge_key(self.old_to_new[a], self.old_to_new[b])


@dataclass(frozen=True)
class LiftedSet:
    dominating_set: DominatingSet
    vertex_guard: int

    def covered_vertices(self):
        return self.dominating_set.covered_vertices() | {self.vertex_guard}


def contract_edge(graph: TriangulationGraph, edge):
    """
    Contracts a boundary edge into a single vertex
    :param graph: triangulation graph with at least 4 vertices
    :param edge: boundary edge
    :return: contracted graph and the merge map
    """
    n = graph.n
    a, b = edge
    if not graph.has_edge(a, b) or not graph.is_boundary(a, b):
        raise NotBoundary(f"{edge} is not a boundary edge")
    if n < 4:
        raise TooSmall("Contraction needs at least 4 vertices")

    first = a if (b - a) % n == 1 else b
    second = (first + 1) % n
    apex = graph.apex_between(second, first)

    # The second endpoint disappears, everything behind it moves down by one
    old_to_new = [v if v < second else v - 1 for v in range(n)]
    old_to_new[second] = old_to_new[first]
    new_to_old = [v if v < second else v + 1 for v in range(n - 1)]
    new_to_old[old_to_new[first]] = first

    merge_map = MergeMap(
        endpoints=(first, second),
        apex=apex,
        merged=old_to_new[first],
        old_to_new=tuple(old_to_new),
        new_to_old=tuple(new_to_old),
    )

    diagonals = set()
    for p, q in graph.diagonals:
        p_new, q_new = old_to_new[p], old_to_new[q]
        if (p_new - q_new) % (n - 1) not in (1, n - 2):
            diagonals.add(edge_key(p_new, q_new))

    labels = [graph.label(v) for v in new_to_old]
    return build_from_diagonals(n - 1, diagonals, labels), merge_map


def lift_dominating_set(
    graph: TriangulationGraph,
    dominating_set: DominatingSet,
    merge_map: MergeMap,
    vertex,
    excluded_edge=None,
) -> LiftedSet:
    """
    Lifts a dominating set of a contracted graph back to the original graph,
    adding a vertex guard at one endpoint of the contracted edge. A guard on
    the merged vertex and the apex moves to the other endpoint (to the boundary
    version in edge mode), every other guard at the merged vertex returns to
    the endpoint it was incident to.

    The lift alone does not always 2-dominate the original graph. In the fan
    of the 7-gon at vertex 6, contracting (1, 2) onto u = 1 and lifting
    {(0, 1), (3, 5)} gives {(0, 1), (4, 6)} plus vertex 1, which leaves
    triangle (2, 3, 6) with a single covered vertex. Callers check the
    rewritten set and fall back to a local search when it fails.
    :param graph: original graph
    :param dominating_set: dominating set of the contracted graph
    :param merge_map: merge map of the contraction
    :param vertex: endpoint receiving the vertex guard
    :param excluded_edge: edge that must not be used
    :return: lifted set
    """
    u = vertex
    (v,) = set(merge_map.endpoints) - {u}
    x = merge_map.merged
    w = merge_map.apex

    members = set()
    for member in dominating_set.members:
        if x not in member:
            members.add(edge_key(*(merge_map.new_to_old[p] for p in member)))
            continue

        (other,) = set(member) - {x}
        p = merge_map.new_to_old[other]
        if p == w:
            target = edge_key(v, w)
            if dominating_set.mode is Mode.EDGE and not graph.is_boundary(v, w):
                target = edge_key(u, w)
            members.add(target)
        elif graph.has_edge(u, p):
            members.add(edge_key(u, p))
        else:
            members.add(edge_key(v, p))

    if excluded_edge is not None:
        members.discard(edge_key(*excluded_edge))

    return LiftedSet(DominatingSet(dominating_set.mode, frozenset(members)), u)

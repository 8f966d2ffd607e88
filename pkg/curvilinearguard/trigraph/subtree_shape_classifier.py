import functools
from itertools import combinations_with_replacement
from typing import Optional

from curvilinearguard.trigraph.triangulation_graph import (
    Mode,
    TriangulationGraph,
    edge_key,
)

# Lower limit on the number of cut off boundary edges per mode
SHAPE_LAMBDA = {Mode.DIAGONAL: 4, Mode.EDGE: 6}

LEAF = "()"


@functools.cache
def rooted_trees(size):
    """
    Canonical forms of unordered rooted trees with at most two children per node
    :param size: number of nodes
    :return: sorted tuple of canonical strings
    """
    if size == 1:
        return (LEAF,)

    forms = {"(" + child + ")" for child in rooted_trees(size - 1)}
    for left_size in range(1, (size - 1) // 2 + 1):
        right_size = size - 1 - left_size
        if left_size == right_size:
            pairs = combinations_with_replacement(rooted_trees(left_size), 2)
        else:
            pairs = (
                (left, right)
                for left in rooted_trees(left_size)
                for right in rooted_trees(right_size)
            )
        forms.update("(" + "".join(sorted(pair)) + ")" for pair in pairs)
    return tuple(sorted(forms))


@functools.cache
def shape_table(lam):
    """
    Dual subtrees of minimal sides: k boundary edges with lam <= k <= 2(lam-1)
    and no inner diagonal cutting off lam or more edges, so every child subtree
    of the root holds at most lam-2 triangles
    :param lam: lower limit on the number of cut off boundary edges
    :return: dict from canonical form to shape id
    """
    table = {}
    limit = lam - 2
    for nodes in range(lam - 1, 2 * lam - 2):
        forms = set()
        if nodes - 1 <= limit:
            forms.update("(" + child + ")" for child in rooted_trees(nodes - 1))
        for left_size in range(1, (nodes - 1) // 2 + 1):
            right_size = nodes - 1 - left_size
            if right_size > limit:
                continue
            for left in rooted_trees(left_size):
                for right in rooted_trees(right_size):
                    forms.add("(" + "".join(sorted((left, right))) + ")")
        for index, form in enumerate(sorted(forms)):
            table[form] = f"k{nodes + 1}.{index}"
    return table


def shape_k(shape_id):
    return int(shape_id[1 : shape_id.index(".")])


def canonical_subtree(root, parent_edge, links, cap) -> Optional[tuple]:
    """
    Canonical form of the dual subtree hanging below a root triangle
    :param root: root triangle
    :param parent_edge: edge towards the parent, never crossed
    :param links: callable returning (edge, neighbour) pairs of a triangle
    :param cap: maximum number of triangles explored
    :return: (canonical form, number of triangles) or None beyond the cap
    """
    budget = [cap]

    def visit(triangle, via):
        budget[0] -= 1
        if budget[0] < 0:
            return None
        children = []
        for edge, neighbour in links(triangle):
            if edge == via:
                continue
            child = visit(neighbour, edge)
            if child is None:
                return None
            children.append(child)
        return "(" + "".join(sorted(children)) + ")"

    form = visit(root, parent_edge)
    if form is None:
        return None
    return form, cap - budget[0]


def graph_links(graph: TriangulationGraph):
    triangles = graph.triangles
    incidence = graph.edge_triangles

    def links(index):
        a, b, c = triangles[index]
        found = []
        for edge in ((a, b), (b, c), (a, c)):
            for neighbour in incidence[edge]:
                if neighbour != index:
                    found.append((edge, neighbour))
        return found

    return links


def classify_side(graph: TriangulationGraph, diagonal, apex, mode: Mode):
    """Shape id of the side of a diagonal containing the given apex"""
    lam = SHAPE_LAMBDA[mode]
    root = graph.edge_triangles[diagonal]
    (root,) = [t for t in root if apex in graph.triangles[t]]
    found = canonical_subtree(root, diagonal, graph_links(graph), 2 * lam - 3)
    if found is None:
        return None
    return shape_table(lam).get(found[0])


def classify_subtree_shape(graph: TriangulationGraph, diagonal, mode: Mode):
    """
    Matches the sides of a diagonal against the minimal configurations
    :param graph: triangulation graph
    :param diagonal: label pair
    :param mode: diagonal or edge configurations
    :return: shape id of the first matching side (a..b before b..a) or None
    """
    a, b = edge_key(*diagonal)
    if not graph.is_diagonal(a, b):
        return None

    for first, second in ((a, b), (b, a)):
        apex = graph.apex_between(first, second)
        shape = classify_side(graph, (a, b), apex, mode)
        if shape is not None:
            return shape
    return None

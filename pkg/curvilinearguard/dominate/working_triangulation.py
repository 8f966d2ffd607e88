from dataclasses import dataclass

from curvilinearguard.trigraph.subtree_shape_classifier import (
    canonical_subtree,
    shape_table,
)
from curvilinearguard.trigraph.triangulation_graph import (
    TriangulationGraph,
    edge_key,
)


class TrianglePatch:
    """Frozen copy of the triangles of a cut off side, answering frame queries"""

    def __init__(self, triangles):
        self.triangles = tuple(triangles)
        self.edge_triangles = {}
        for triangle in self.triangles:
            a, b, c = triangle
            for edge in ((a, b), (b, c), (a, c)):
                self.edge_triangles.setdefault(edge, []).append(triangle)
        self.edges = frozenset(self.edge_triangles)

    def has_edge(self, a, b):
        return edge_key(a, b) in self.edge_triangles

    def third_vertices(self, a, b):
        key = edge_key(a, b)
        return [
            next(v for v in triangle if v not in key)
            for triangle in self.edge_triangles.get(key, [])
        ]


@dataclass(frozen=True)
class Candidate:
    diagonal: tuple
    # Side vertices v0..vk in counterclockwise order
    walk: tuple
    # Triangle of the side lying on the diagonal
    root: int

    @property
    def k(self):
        return len(self.walk) - 1


class WorkingTriangulation:
    """
    Mutable view of a triangulation graph for the queue algorithms. Cut off
    triangles are flagged dead and the boundary is a doubly linked list over
    the original labels, so a cut touches only the triangles of its side.
    """

    def __init__(self, graph: TriangulationGraph):
        n = graph.n
        self.triangles = graph.triangles
        self.edge_triangles = graph.edge_triangles
        self.alive = [True] * len(self.triangles)
        self.succ = [(v + 1) % n for v in range(n)]
        self.pred = [(v - 1) % n for v in range(n)]
        self.present = [True] * n
        self.size = n

    def alive_on(self, edge):
        return [t for t in self.edge_triangles.get(edge, []) if self.alive[t]]

    def has_edge(self, a, b):
        return bool(self.alive_on(edge_key(a, b)))

    def is_interior(self, edge):
        return len(self.alive_on(edge)) == 2

    def links(self, triangle):
        a, b, c = self.triangles[triangle]
        found = []
        for edge in ((a, b), (b, c), (a, c)):
            for neighbour in self.edge_triangles[edge]:
                if neighbour != triangle and self.alive[neighbour]:
                    found.append((edge, neighbour))
        return found

    def interior_edges(self):
        return [edge for edge in self.edge_triangles if self.is_interior(edge)]

    def walk(self, start, end, limit):
        path = [start]
        vertex = start
        for _ in range(limit):
            vertex = self.succ[vertex]
            path.append(vertex)
            if vertex == end:
                return path
        return None

    def match(self, diagonal, lam):
        """
        Tests whether a side of the diagonal is a minimal configuration: between
        lam and 2(lam-1) boundary edges, no inner diagonal cutting off lam or more
        :param diagonal: edge key
        :param lam: lower limit on the number of cut off boundary edges
        :return: candidate or None
        """
        on_diagonal = self.alive_on(diagonal)
        if len(on_diagonal) != 2:
            return None

        shapes = shape_table(lam)
        a, b = diagonal
        for start, end in ((a, b), (b, a)):
            path = self.walk(start, end, 2 * lam - 2)
            if path is None or len(path) - 1 < lam:
                continue
            inner = set(path[1:-1])
            (root,) = [
                t for t in on_diagonal if any(v in inner for v in self.triangles[t])
            ]
            found = canonical_subtree(root, diagonal, self.links, 2 * lam - 3)
            if found is not None and found[0] in shapes:
                return Candidate(diagonal, tuple(path), root)
        return None

    def side_triangles(self, candidate: Candidate):
        found = [candidate.root]
        stack = [(candidate.root, candidate.diagonal)]
        while stack:
            triangle, via = stack.pop()
            for edge, neighbour in self.links(triangle):
                if edge != via:
                    found.append(neighbour)
                    stack.append((neighbour, edge))
        return found

    def cut(self, candidate: Candidate, side, kept):
        """
        Removes the side triangles not spanned by v0, vk and the kept vertices
        :param candidate: matched side
        :param side: triangle indices of the side
        :param kept: labels of the cut off vertices that stay
        :return: indices of the surviving side triangles
        """
        survivors = {candidate.walk[0], candidate.walk[-1], *kept}
        remaining = []
        for triangle in side:
            if set(self.triangles[triangle]) <= survivors:
                remaining.append(triangle)
            else:
                self.alive[triangle] = False

        chain = [v for v in candidate.walk if v in survivors]
        for first, second in zip(chain, chain[1:]):
            self.succ[first] = second
            self.pred[second] = first
        for vertex in candidate.walk:
            if vertex not in survivors:
                self.present[vertex] = False
                self.size -= 1
        return remaining

    def extract(self) -> TriangulationGraph:
        """Current polygon relabelled 0..m-1, labels being the input vertices"""
        start = self.present.index(True)
        order = [start]
        vertex = self.succ[start]
        while vertex != start:
            order.append(vertex)
            vertex = self.succ[vertex]

        m = len(order)
        position = {v: i for i, v in enumerate(order)}
        diagonals = set()
        for index, triangle in enumerate(self.triangles):
            if not self.alive[index]:
                continue
            a, b, c = triangle
            for p, q in ((a, b), (b, c), (a, c)):
                i, j = position[p], position[q]
                if (i - j) % m not in (1, m - 1):
                    diagonals.add(edge_key(i, j))
        return TriangulationGraph(m, diagonals, order)

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from curvilinearguard.errors import (
    AdjacentPair,
    CrossingDiagonals,
    DuplicateDiagonal,
    ForeignMember,
    LabelOutOfRange,
    NonEdgeMember,
    TooSmall,
    WrongDiagonalCount,
)


class Mode(Enum):
    DIAGONAL = "diagonal"
    EDGE = "edge"


def edge_key(a, b):
    """Canonical unordered label pair"""
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class HalfEdge:
    origin: int
    target: int
    twin: int
    next: int
    face: Optional[int]
    is_boundary: bool
    in_set: bool = False


@dataclass(frozen=True)
class DominatingSet:
    mode: Mode
    members: frozenset

    @staticmethod
    def of(mode, members: Iterable):
        return DominatingSet(mode, frozenset(edge_key(a, b) for a, b in members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return edge_key(*item) in self.members

    def sorted_members(self):
        return sorted(self.members)

    def covered_vertices(self):
        return {v for member in self.members for v in member}


class TriangulationGraph:
    """
    Maximal outerplanar graph on the labels 0..n-1, the boundary cycle being
    the label order. Instances are immutable, build them with
    build_from_diagonals. The optional labels tuple maps every vertex to the
    label it carries in the graph this one was cut or contracted from.
    """

    __slots__ = (
        "_n",
        "_diagonals",
        "_diagonal_keys",
        "_labels",
        "_neighbours",
        "_triangles",
        "_edge_triangles",
        "_half_edges",
    )

    def __init__(self, n, diagonals, labels=None):
        self._n = n
        self._diagonals = tuple(sorted(edge_key(a, b) for a, b in diagonals))
        self._diagonal_keys = frozenset(self._diagonals)
        self._labels = tuple(labels) if labels is not None else None
        self._neighbours = None
        self._triangles = None
        self._edge_triangles = None
        self._half_edges = None

    def __repr__(self):
        return f"TriangulationGraph(n={self._n}, diagonals={list(self._diagonals)})"

    def __eq__(self, other):
        if not isinstance(other, TriangulationGraph):
            return NotImplemented
        return self._n == other._n and self._diagonals == other._diagonals

    def __hash__(self):
        return hash((self._n, self._diagonals))

    @property
    def n(self):
        return self._n

    @property
    def diagonals(self):
        return self._diagonals

    @property
    def labels(self):
        return self._labels

    def label(self, v):
        return self._labels[v] if self._labels is not None else v

    @property
    def boundary_edges(self):
        return [edge_key(i, (i + 1) % self._n) for i in range(self._n)]

    @property
    def edges(self):
        return sorted(self.boundary_edges + list(self._diagonals))

    def is_boundary(self, a, b):
        return (a - b) % self._n in (1, self._n - 1)

    def has_edge(self, a, b):
        if not (0 <= a < self._n and 0 <= b < self._n) or a == b:
            return False
        return self.is_boundary(a, b) or edge_key(a, b) in self._diagonal_keys

    def is_diagonal(self, a, b):
        return edge_key(a, b) in self._diagonal_keys

    @property
    def neighbours(self):
        """Neighbours of every vertex in counterclockwise order starting at v+1"""
        if self._neighbours is None:
            n = self._n
            adjacency = [[(v + 1) % n, (v - 1) % n] for v in range(n)]
            for a, b in self._diagonals:
                adjacency[a].append(b)
                adjacency[b].append(a)
            self._neighbours = [
                sorted(set(adjacency[v]), key=lambda u, v=v: (u - v) % n)
                for v in range(n)
            ]
        return self._neighbours

    @property
    def triangles(self):
        """Triangles as sorted vertex triples"""
        if self._triangles is None:
            found = set()
            for v, neighbours in enumerate(self.neighbours):
                for a, b in zip(neighbours, neighbours[1:]):
                    found.add(tuple(sorted((v, a, b))))
            self._triangles = sorted(found)
        return self._triangles

    @property
    def edge_triangles(self):
        """Maps every edge to the indices of the triangles it bounds"""
        if self._edge_triangles is None:
            incidence = {}
            for index, (a, b, c) in enumerate(self.triangles):
                for edge in ((a, b), (b, c), (a, c)):
                    incidence.setdefault(edge, []).append(index)
            self._edge_triangles = incidence
        return self._edge_triangles

    def third_vertices(self, a, b):
        """Apexes of the one or two triangles on edge (a, b)"""
        key = edge_key(a, b)
        found = []
        for index in self.edge_triangles.get(key, []):
            (apex,) = set(self.triangles[index]) - set(key)
            found.append(apex)
        return found

    def apex_between(self, a, b):
        """
        Third vertex of the triangle on edge (a, b) lying strictly inside the
        counterclockwise walk from a to b, or None if that side is empty
        :param a: first endpoint
        :param b: second endpoint
        :return: apex label
        """
        span = (b - a) % self._n
        for index in self.edge_triangles.get(edge_key(a, b), []):
            (apex,) = set(self.triangles[index]) - {a, b}
            if 0 < (apex - a) % self._n < span:
                return apex
        return None

    @property
    def half_edges(self):
        """Half-edge records: interior ones first, then the outer boundary"""
        if self._half_edges is None:
            self._half_edges = tuple(self._build_half_edges())
        return self._half_edges

    def _build_half_edges(self):
        n = self._n
        records = []
        for face, (a, b, c) in enumerate(self.triangles):
            base = len(records)
            for offset, (origin, target) in enumerate(((a, b), (b, c), (c, a))):
                records.append(
                    dict(
                        origin=origin,
                        target=target,
                        next=base + (offset + 1) % 3,
                        face=face,
                        is_boundary=self.is_boundary(origin, target),
                    )
                )
        outer_base = len(records)
        for i in range(n):
            # Outer half-edge i+1 -> i, followed by i -> i-1
            records.append(
                dict(
                    origin=(i + 1) % n,
                    target=i,
                    next=outer_base + (i - 1) % n,
                    face=None,
                    is_boundary=True,
                )
            )
        index = {(r["origin"], r["target"]): i for i, r in enumerate(records)}
        return [HalfEdge(twin=index[(r["target"], r["origin"])], **r) for r in records]

    def marked_half_edges(self, dominating_set: DominatingSet):
        """Half-edges with the in_set flag raised for members of the set"""
        return tuple(
            HalfEdge(
                origin=h.origin,
                target=h.target,
                twin=h.twin,
                next=h.next,
                face=h.face,
                is_boundary=h.is_boundary,
                in_set=edge_key(h.origin, h.target) in dominating_set.members,
            )
            for h in self.half_edges
        )

    def with_labels(self, labels):
        return TriangulationGraph(self._n, self._diagonals, labels)


def build_from_diagonals(n, diagonals, labels=None) -> TriangulationGraph:
    """
    Builds a triangulation graph of the convex n-gon and validates it
    :param n: number of vertices
    :param diagonals: label pairs
    :param labels: optional labels of the vertices in a parent graph
    :return: triangulation graph
    """
    if n < 3:
        raise TooSmall(f"A triangulation graph needs at least 3 vertices, got {n}")

    pairs = [tuple(pair) for pair in diagonals]
    if len(pairs) != n - 3:
        raise WrongDiagonalCount(n, len(pairs))

    seen = set()
    for pair in pairs:
        a, b = pair
        if not (0 <= a < n and 0 <= b < n):
            raise LabelOutOfRange(pair, n)
        if a == b or (a - b) % n in (1, n - 1):
            raise AdjacentPair(pair)
        key = edge_key(a, b)
        if key in seen:
            raise DuplicateDiagonal(key)
        seen.add(key)

    crossing = find_crossing_pair(seen)
    if crossing is not None:
        raise CrossingDiagonals(*crossing)

    return TriangulationGraph(n, seen, labels)


def find_crossing_pair(chords):
    """
    Finds two crossing chords of a convex polygon in O(m log m)
    :param chords: canonical label pairs
    :return: offending pair or None
    """
    stack = []
    for a, b in sorted(chords, key=lambda chord: (chord[0], -chord[1])):
        while stack and stack[-1][1] <= a:
            stack.pop()
        if stack and stack[-1][0] < a < stack[-1][1] < b:
            return stack[-1], (a, b)
        stack.append((a, b))
    return None


def uncovered_vertices(graph: TriangulationGraph, dominating_set: DominatingSet):
    return set(range(graph.n)) - dominating_set.covered_vertices()


def validate_members(graph: TriangulationGraph, dominating_set: DominatingSet):
    for member in dominating_set.sorted_members():
        if not graph.has_edge(*member):
            raise ForeignMember(member)
        if dominating_set.mode is Mode.EDGE and not graph.is_boundary(*member):
            raise NonEdgeMember(f"Member {member} is a diagonal in edge mode")


def is_2_dominated(graph: TriangulationGraph, dominating_set: DominatingSet) -> bool:
    """
    Every triangle has two vertices covered exactly when no edge or diagonal
    joins two uncovered vertices
    :param graph: triangulation graph
    :param dominating_set: candidate set
    :return: True if the set 2-dominates the graph
    """
    for member in dominating_set.members:
        if not graph.has_edge(*member):
            raise ForeignMember(member)

    covered = dominating_set.covered_vertices()
    return all(a in covered or b in covered for a, b in graph.edges)

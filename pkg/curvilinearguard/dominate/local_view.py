from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional

from curvilinearguard.errors import RuleNotApplicable
from curvilinearguard.trigraph.triangulation_graph import edge_key


class LocalFrame:
    """
    Local labels v0, v1, ... of a cut off side. The host answers has_edge and
    third_vertices queries in its own labels, vertices lists the host labels
    in counterclockwise order starting at v0. A reflected frame reads the
    side backwards: vi becomes v(pivot-i).
    """

    def __init__(self, host, vertices, pivot=None, reflected=False):
        self.host = host
        self.vertices = tuple(vertices)
        self.pivot = len(self.vertices) - 1 if pivot is None else pivot
        self.reflected = reflected
        self._position = {label: index for index, label in enumerate(self.vertices)}

    @property
    def k(self):
        return self.pivot

    def v(self, i):
        size = len(self.vertices)
        return self.vertices[(self.pivot - i) % size if self.reflected else i % size]

    def index(self, label) -> Optional[int]:
        position = self._position.get(label)
        if position is None:
            return None
        size = len(self.vertices)
        return (self.pivot - position) % size if self.reflected else position

    def edge(self, i, j):
        return edge_key(self.v(i), self.v(j))

    def has(self, i, j):
        return self.host.has_edge(self.v(i), self.v(j))

    def apex(self, i, j):
        """
        Local index of the triangle apex on edge vi vj lying strictly between
        i and j, or None
        """
        size = len(self.vertices)
        for label in self.host.third_vertices(self.v(i), self.v(j)):
            index = self.index(label)
            if index is None:
                continue
            for candidate in (index, index + size):
                if i < candidate < j:
                    return candidate % size
        return None

    def reflect(self):
        return LocalFrame(self.host, self.vertices, self.pivot, not self.reflected)

    def describe(self):
        return f"k={self.pivot} v0={self.v(0)} reflected={self.reflected}"


class MemberTable:
    """Mutable member set with per-vertex cover counts"""

    def __init__(self, members=()):
        self.members = set()
        self.counts = Counter()
        for member in members:
            self.add(member)

    def __len__(self):
        return len(self.members)

    def has(self, a, b):
        return edge_key(a, b) in self.members

    def covered(self, vertex):
        return self.counts[vertex] > 0

    def add(self, member):
        member = edge_key(*member)
        if member not in self.members:
            self.members.add(member)
            self.counts[member[0]] += 1
            self.counts[member[1]] += 1

    def remove(self, member):
        member = edge_key(*member)
        if member in self.members:
            self.members.remove(member)
            self.counts[member[0]] -= 1
            self.counts[member[1]] -= 1

    def covered_after(self, vertex, removed, added):
        count = self.counts[vertex]
        count -= sum(1 for member in removed if vertex in member)
        count += sum(1 for member in added if vertex in member)
        return count > 0

    def apply(self, rewrite):
        for member in rewrite.remove:
            self.remove(member)
        for member in rewrite.add:
            self.add(member)


@dataclass(frozen=True)
class Rewrite:
    case: str
    # Members dropped from the set of the reduced graph, host labels
    remove: frozenset = frozenset()
    # Members added, host labels
    add: frozenset = frozenset()

    def effective(self, table: MemberTable):
        """Members actually leaving and joining the table"""
        removed = {m for m in self.remove if m in table.members and m not in self.add}
        added = {m for m in self.add if m not in table.members}
        return removed, added


class LocalSet:
    """Membership queries of a member table in the local labels of a frame"""

    def __init__(self, frame: LocalFrame, table: MemberTable):
        self.frame = frame
        self.table = table

    def has(self, i, j):
        return self.table.has(self.frame.v(i), self.frame.v(j))

    def cov(self, i):
        return self.table.covered(self.frame.v(i))

    def count(self, *pairs):
        return sum(1 for pair in pairs if self.has(*pair))

    def reflected(self):
        return LocalSet(self.frame.reflect(), self.table)

    def rewrite(self, case, remove=(), add=()):
        return Rewrite(
            case=case,
            remove=frozenset(self.frame.edge(i, j) for i, j in remove),
            add=frozenset(self.frame.edge(i, j) for i, j in add),
        )

    def impossible(self, case):
        raise RuleNotApplicable(f"{case} excluded by 2-domination of the reduced graph")


@dataclass(frozen=True)
class Reduction:
    """
    Structural decision of a case rule: the triangles of the cut off side
    that survive into the reduced graph, or a contraction of the remainder
    """

    rule: str
    frame: LocalFrame
    # Local indices of the cut off vertices kept next to v0 and vk
    keep: tuple = ()
    # Local index of the endpoint receiving the vertex guard of a contraction
    contract_at: Optional[int] = None
    rewrite: Callable = field(default=None, compare=False)

    def kept_vertices(self):
        return [self.frame.v(i) for i in self.keep]

    def trace(self):
        return f"rule={self.rule} {self.frame.describe()} keep={self.keep}"

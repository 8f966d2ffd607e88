import logging
from dataclasses import dataclass, field
from enum import Enum

from curvilinearguard.errors import NonEdgeMember, NotDominating
from curvilinearguard.geometry.constrained_triangulator import (
    ConstrainedTriangulation,
    DiagonalKind,
)
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    edge_key,
    is_2_dominated,
    validate_members,
)

logger = logging.getLogger(__name__)


class GuardMode(Enum):
    EDGE = "edge"
    MOBILE = "mobile"


@dataclass(frozen=True, order=True)
class ArcGuard:
    index: int


@dataclass(frozen=True, order=True)
class DiagonalGuard:
    a: int
    b: int

    @staticmethod
    def of(a, b):
        return DiagonalGuard(*edge_key(a, b))


@dataclass(frozen=True)
class GuardSet:
    mode: GuardMode
    guards: tuple = field(default_factory=tuple)

    @staticmethod
    def of(mode, guards):
        # Arc guards first, each guard once
        unique = set(guards)
        arcs = sorted(g for g in unique if isinstance(g, ArcGuard))
        diagonals = sorted(g for g in unique if isinstance(g, DiagonalGuard))
        return GuardSet(mode, tuple(arcs + diagonals))

    def __len__(self):
        return len(self.guards)

    def __iter__(self):
        return iter(self.guards)

    @property
    def arc_indices(self):
        return [g.index for g in self.guards if isinstance(g, ArcGuard)]

    def without(self, guard):
        return GuardSet(self.mode, tuple(g for g in self.guards if g != guard))


@dataclass(frozen=True)
class GuardMapping:
    guard_set: GuardSet
    # Weak diagonals replaced by the arc of their room
    promotions: int = 0


def map_diagonal_set(ct: ConstrainedTriangulation, dominating_set: DominatingSet) -> GuardMapping:
    graph = ct.graph
    validate_members(graph, dominating_set)
    if not is_2_dominated(graph, dominating_set):
        raise NotDominating("The set does not 2-dominate the constrained triangulation")

    guards = []
    promotions = 0
    n = graph.n
    for a, b in dominating_set.sorted_members():
        if graph.is_boundary(a, b):
            guards.append(ArcGuard(a if (b - a) % n == 1 else b))
        elif ct.kind(a, b) is DiagonalKind.WEAK_DIAGONAL:
            promotions += 1
            guards.append(ArcGuard(ct.room_of(a, b)))
        else:
            guards.append(DiagonalGuard.of(a, b))

    guard_set = GuardSet.of(GuardMode.MOBILE, guards)
    logger.debug(
        f"mobile guards: {len(dominating_set)} members, {len(guard_set)} guards, "
        f"{promotions} weak diagonals promoted"
    )
    return GuardMapping(guard_set, promotions)


def mobile_guards_from_diag_set(
    ct: ConstrainedTriangulation, dominating_set: DominatingSet
) -> GuardSet:
    """
    Turns a diagonal 2-dominating set of the constrained triangulation into
    mobile guards: edges become their arcs, weak diagonals the arc of their
    crescent, every other diagonal stays a straight diagonal guard
    :param ct: constrained triangulation
    :param dominating_set: diagonal 2-dominating set
    :return: guard set no larger than the dominating set
    """
    return map_diagonal_set(ct, dominating_set).guard_set


def edge_guards_from_edge_set(
    ct: ConstrainedTriangulation, dominating_set: DominatingSet
) -> GuardSet:
    """
    Turns an edge 2-dominating set into edge guards, one arc per edge
    :param ct: constrained triangulation
    :param dominating_set: edge 2-dominating set
    :return: guard set of the same size
    """
    graph = ct.graph
    n = graph.n
    for member in dominating_set.sorted_members():
        if not graph.is_boundary(*member):
            raise NonEdgeMember(f"Member {member} is a diagonal, not a polygon edge")
    if not is_2_dominated(graph, DominatingSet(Mode.EDGE, dominating_set.members)):
        raise NotDominating("The set does not 2-dominate the constrained triangulation")

    return GuardSet.of(
        GuardMode.EDGE,
        [ArcGuard(a if (b - a) % n == 1 else b) for a, b in dominating_set.sorted_members()],
    )

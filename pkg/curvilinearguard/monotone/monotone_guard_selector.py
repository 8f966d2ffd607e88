import logging
from typing import NamedTuple, Optional

from curvilinearguard.dominate.domination_bounds import monotone_bound
from curvilinearguard.geometry.guard_mapper import ArcGuard, GuardMode, GuardSet
from curvilinearguard.monotone.monotone_decomposer import MonotoneDecomposition, decompose
from curvilinearguard.tracking_decorator import TrackingDecorator

logger = logging.getLogger(__name__)


class GroupChoice(NamedTuple):
    group: int
    rule: str
    edge: Optional[int]


def _group_rules(decomposition: MonotoneDecomposition, base):
    """Rules for the four regions right of u(base), in the order they are tried"""
    last = decomposition.n + 1

    def sigma(j):
        return decomposition.sigma[j] if j <= last else 0

    def edge(edges, j):
        return edges[j] if j <= last else None

    left, right = decomposition.left_edges, decomposition.right_edges
    return [
        ("right-of-second", sigma(base + 1) != sigma(base + 2), edge(right, base + 1)),
        ("left-of-fourth", sigma(base + 2) != sigma(base + 3), edge(left, base + 3)),
        ("right-of-first", sigma(base) != sigma(base + 1), edge(right, base)),
        ("left-of-fifth", sigma(base + 3) != sigma(base + 4), edge(left, base + 4)),
        ("opposite-of-third", True, edge(decomposition.opposite_edges, base + 2)),
    ]


def select_group_edges(decomposition: MonotoneDecomposition):
    """
    Picks one edge per group of four consecutive regions between the
    vertical lines through the vertices
    :param decomposition: monotone decomposition
    :return: one choice per group
    """
    choices = []
    for group in range(monotone_bound(decomposition.n)):
        base = 4 * group
        choice = GroupChoice(group, "none", None)
        for rule, applies, edge in _group_rules(decomposition, base):
            if applies and edge is not None:
                choice = GroupChoice(group, rule, edge)
                break
        if choice.edge is None:
            logger.warning(f"monotone group {group}: no rule yields an edge")
        else:
            logger.debug(f"monotone group {group}: {choice.rule} -> edge {choice.edge}")
        choices.append(choice)
    return choices


@TrackingDecorator.track_time
def monotone_edge_guards(polygon) -> GuardSet:
    """
    Edge guard set of at most ceil((n+1)/4) edges for an x-monotone
    piecewise-convex or locally convex polygon
    :param polygon: x-monotone polygon with at least 2 vertices
    :return: edge guard set
    """
    decomposition = decompose(polygon)
    choices = select_group_edges(decomposition)
    return GuardSet.of(
        GuardMode.EDGE, [ArcGuard(c.edge) for c in choices if c.edge is not None]
    )

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

from curvilinearguard.errors import NotMonotone

logger = logging.getLogger(__name__)

# Extreme points closer than this to an arc end are taken to be the end itself
END_MARGIN = 1e-9

LOWER = -1
UPPER = 1


class Piece(NamedTuple):
    """x-monotone stretch of one outline arc between two parameters"""

    arc: int
    t0: float
    t1: float
    start: tuple
    end: tuple

    @property
    def direction(self):
        return (self.end[0] > self.start[0]) - (self.end[0] < self.start[0])

    @property
    def x_range(self):
        return min(self.start[0], self.end[0]), max(self.start[0], self.end[0])


@dataclass(frozen=True)
class MonotoneDecomposition:
    # u0..u(n+1): extreme points around the vertices sorted by x then y
    points: tuple
    # Corner index of u1..un, None at u0 and u(n+1)
    corners: tuple
    sigma: tuple
    left_edges: tuple
    right_edges: tuple
    opposite_edges: tuple

    @property
    def n(self):
        return len(self.points) - 2


def boundary_pieces(outline):
    """
    Splits every arc at the interior points where x turns
    :param outline: piecewise-convex polygon
    :return: pieces in counterclockwise order
    """
    pieces = []
    for index, arc in enumerate(outline.arcs):
        cuts = [t for t in arc.x_extreme_points() if END_MARGIN < t < 1 - END_MARGIN]
        params = [0.0, *cuts, 1.0]
        points = [arc.p, *(arc.point_at(t) for t in cuts), arc.q]
        for j in range(len(params) - 1):
            pieces.append(Piece(index, params[j], params[j + 1], points[j], points[j + 1]))
    return pieces


def is_x_monotone(polygon) -> bool:
    """
    Every vertical line meets the polygon in one segment at most exactly when
    the boundary turns between increasing and decreasing x only twice
    :param polygon: piecewise-convex or locally convex polygon
    :return: True if x-monotone
    """
    directions = [p.direction for p in boundary_pieces(polygon.outline) if p.direction != 0]
    if not directions:
        return False
    changes = sum(1 for a, b in zip(directions, directions[1:] + directions[:1]) if a != b)
    return changes <= 2


def _extremes(pieces):
    """Positions of the lexicographically smallest and largest boundary points"""
    lowest = min(range(len(pieces)), key=lambda i: (pieces[i].start[0], pieces[i].start[1]))
    highest = max(range(len(pieces)), key=lambda i: (pieces[i].start[0], pieces[i].start[1]))
    return lowest, highest


def _between(position, start, end, size):
    """Position strictly inside the cyclic range start..end"""
    return 0 < (position - start) % size < (end - start) % size


def decompose(polygon) -> MonotoneDecomposition:
    """
    Sorts the vertices along x, assigns each the chain it lies on and looks
    up its left, right and opposite edges
    :param polygon: x-monotone piecewise-convex or locally convex polygon
    :return: decomposition
    """
    if not is_x_monotone(polygon):
        raise NotMonotone("The polygon is not x-monotone")

    outline = polygon.outline
    pieces = boundary_pieces(outline)
    size = len(pieces)
    lowest, highest = _extremes(pieces)
    lower_chain = [pieces[(lowest + i) % size] for i in range((highest - lowest) % size)]
    upper_chain = [pieces[(highest + i) % size] for i in range((lowest - highest) % size)]
    # Both chains from left to right
    upper_chain = [
        Piece(p.arc, p.t1, p.t0, p.end, p.start) for p in reversed(upper_chain)
    ]

    start_of_arc = {}
    for position, piece in enumerate(pieces):
        if piece.t0 == 0.0:
            start_of_arc[piece.arc] = position

    corner_position = {k: start_of_arc[c] for k, c in enumerate(polygon.corners)}
    n = polygon.n
    edge_count = n

    def chain_of(k):
        position = corner_position[k]
        if position in (lowest, highest):
            return 0
        return LOWER if _between(position, lowest, highest, size) else UPPER

    def edge_at(position, incoming):
        arc = pieces[position].arc
        if incoming and pieces[position].t0 == 0.0:
            arc = (arc - 1) % outline.n
        return polygon.edge_of_arc(arc)

    order = sorted(range(n), key=lambda k: outline.vertex(polygon.corners[k]))
    points = [pieces[lowest].start]
    corners = [None]
    sigma = [0]
    left_edges = [None]
    right_edges = [edge_at(lowest, incoming=False)]
    opposite_edges = [right_edges[0]]

    for k in order:
        chain = chain_of(k)
        outgoing, incoming = k, (k - 1) % edge_count
        if chain == LOWER:
            left, right = incoming, outgoing
        elif chain == UPPER:
            left, right = outgoing, incoming
        elif corner_position[k] == lowest:
            left, right = None, outgoing
        else:
            left, right = incoming, None

        vertex = outline.vertex(polygon.corners[k])
        if chain == 0:
            opposite = right if right is not None else left
        else:
            opposite = _opposite_edge(
                polygon, upper_chain if chain == LOWER else lower_chain, vertex[0]
            )

        points.append(vertex)
        corners.append(k)
        sigma.append(chain)
        left_edges.append(left)
        right_edges.append(right)
        opposite_edges.append(opposite)

    points.append(pieces[highest].start)
    corners.append(None)
    sigma.append(0)
    left_edges.append(edge_at(highest, incoming=True))
    right_edges.append(None)
    opposite_edges.append(left_edges[-1])

    decomposition = MonotoneDecomposition(
        tuple(points),
        tuple(corners),
        tuple(sigma),
        tuple(left_edges),
        tuple(right_edges),
        tuple(opposite_edges),
    )
    logger.debug(f"monotone decomposition n={n}: sigma={list(decomposition.sigma)}")
    return decomposition


def _opposite_edge(polygon, chain, x) -> Optional[int]:
    """
    Edge of the chain met by the vertical line at x; at a vertex of the
    chain the edge to its right wins
    """
    for piece in chain:
        low, high = piece.x_range
        if low <= x < high:
            return polygon.edge_of_arc(piece.arc)
    for piece in reversed(chain):
        low, high = piece.x_range
        if low <= x <= high:
            return polygon.edge_of_arc(piece.arc)
    return None

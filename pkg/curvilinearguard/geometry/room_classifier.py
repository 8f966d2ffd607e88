from dataclasses import dataclass, field
from enum import Enum

from curvilinearguard.geometry.curvilinear_polygon import PiecewiseConvexPolygon
from curvilinearguard.geometry.predicates import cross, on_open_segment, squared_distance


class RoomStatus(Enum):
    DEGENERATE = "degenerate"
    EMPTY = "empty"
    NON_EMPTY = "non-empty"


@dataclass(frozen=True)
class Room:
    index: int
    status: RoomStatus
    # Vertices on the open chord
    on_chord: tuple = field(default_factory=tuple)
    # Vertices inside the room, on_chord included
    inside: tuple = field(default_factory=tuple)
    # Chain from vertex index to vertex index + 1 closing the room off
    chain: tuple = field(default_factory=tuple)

    @property
    def inner_chain(self):
        return self.chain[1:-1]


def in_room(polygon: PiecewiseConvexPolygon, index, w):
    """
    Exact test for a point strictly on the arc side of the chord and strictly
    inside the circle of arc index
    """
    arc = polygon.arc(index)
    if arc.is_segment:
        return False
    return cross(arc.p, arc.q, w) < 0 and squared_distance(w, arc.center) < arc.radius_squared


def hull_chain(p, q, points):
    """
    Convex chain from p to q around points lying to the right of pq, in
    counterclockwise order; collinear points are dropped
    :param p: chain start
    :param q: chain end
    :param points: labelled points as (label, point)
    :return: labels along the chain, endpoints excluded
    """
    dx, dy = q[0] - p[0], q[1] - p[1]

    def frame(w):
        # Rotation taking pq onto the positive x-axis, scaled by |pq|
        wx, wy = w[0] - p[0], w[1] - p[1]
        return wx * dx + wy * dy, dx * wy - dy * wx

    start, end = (None, frame(p)), (None, frame(q))
    ordered = sorted(((label, frame(w)) for label, w in points), key=lambda item: item[1])

    chain = [start]
    for item in ordered + [end]:
        while len(chain) >= 2 and _turn(chain[-2][1], chain[-1][1], item[1]) <= 0:
            chain.pop()
        chain.append(item)
    return [label for label, _ in chain[1:-1]]


def _turn(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def classify_room(polygon: PiecewiseConvexPolygon, index) -> Room:
    n = polygon.n
    arc = polygon.arc(index)
    ends = (index, (index + 1) % n)
    if arc.is_segment:
        return Room(index, RoomStatus.DEGENERATE, chain=ends)

    others = [w for w in range(n) if w not in ends]
    on_chord = tuple(w for w in others if on_open_segment(polygon.vertex(w), arc.p, arc.q))
    strictly = tuple(w for w in others if in_room(polygon, index, polygon.vertex(w)))
    inside = tuple(sorted(on_chord + strictly))
    if not inside:
        return Room(index, RoomStatus.EMPTY, chain=ends)

    if strictly:
        middle = hull_chain(arc.p, arc.q, [(w, polygon.vertex(w)) for w in strictly])
    else:
        middle = sorted(on_chord, key=lambda w: squared_distance(arc.p, polygon.vertex(w)))
    return Room(
        index,
        RoomStatus.NON_EMPTY,
        on_chord=on_chord,
        inside=inside,
        chain=(ends[0], *middle, ends[1]),
    )


def classify_rooms(polygon: PiecewiseConvexPolygon):
    """
    Classifies the room of every arc. Each vertex is tested against each
    room, which is quadratic in the number of vertices.
    :param polygon: validated polygon
    :return: list of rooms indexed like the arcs
    """
    return [classify_room(polygon, index) for index in range(polygon.n)]

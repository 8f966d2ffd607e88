import logging
from dataclasses import dataclass
from enum import Enum

from curvilinearguard.errors import DegenerateInput, GraphError, NonSimple
from curvilinearguard.geometry.curvilinear_polygon import PiecewiseConvexPolygon
from curvilinearguard.geometry.predicates import in_triangle, orient
from curvilinearguard.geometry.room_classifier import Room, RoomStatus, classify_rooms
from curvilinearguard.tracking_decorator import TrackingDecorator
from curvilinearguard.trigraph.triangulation_graph import (
    TriangulationGraph,
    build_from_diagonals,
    edge_key,
)

logger = logging.getLogger(__name__)


class DiagonalKind(Enum):
    BOUNDARY_ARC = "boundary-arc"
    CHAIN_DIAGONAL = "chain-diagonal"
    WEAK_DIAGONAL = "weak-diagonal"
    STAR_DIAGONAL = "star-diagonal"


class TriangleClass(Enum):
    STAR = "star"
    CRESCENT = "crescent"
    WEAK = "weak"


@dataclass(frozen=True)
class EdgeInfo:
    kind: DiagonalKind
    # Room the edge belongs to, None for star diagonals
    room: int = None


@dataclass(frozen=True)
class ConstrainedTriangulation:
    polygon: PiecewiseConvexPolygon
    rooms: tuple
    graph: TriangulationGraph
    edges: dict
    triangle_classes: dict

    def kind(self, a, b) -> DiagonalKind:
        return self.edges[edge_key(a, b)].kind

    def room_of(self, a, b):
        return self.edges[edge_key(a, b)].room

    def is_weak(self, a, b):
        info = self.edges.get(edge_key(a, b))
        return info is not None and info.kind is DiagonalKind.WEAK_DIAGONAL

    @property
    def weak_diagonals(self):
        return sorted(e for e, info in self.edges.items() if info.kind is DiagonalKind.WEAK_DIAGONAL)

    def triangles_of(self, triangle_class: TriangleClass):
        return sorted(t for t, c in self.triangle_classes.items() if c is triangle_class)


def crescent_triangles(room: Room):
    """Fan of the crescent from the first chain vertex"""
    chain = room.chain
    return [tuple(sorted((chain[0], chain[j], chain[j + 1]))) for j in range(1, len(chain) - 1)]


def star_cycles(rooms):
    """
    Splits the closed walk along all room chains into simple cycles at
    repeated vertices
    :param rooms: rooms in arc order
    :return: vertex cycles in counterclockwise order
    """
    walk = [v for room in rooms for v in room.chain[:-1]]
    cycles = []
    stack = []
    position = {}
    for v in walk + [walk[0]]:
        if v in position:
            start = position[v]
            cycle = stack[start:]
            for u in stack[start + 1 :]:
                del position[u]
            del stack[start + 1 :]
            if len(set(cycle)) >= 3:
                cycles.append(cycle)
        else:
            position[v] = len(stack)
            stack.append(v)
    return cycles


def ear_clip(points, cycle):
    """
    Triangulates a simple counterclockwise cycle by repeatedly cutting
    strictly convex ears holding no other cycle vertex
    :param points: vertex label -> rational point
    :param cycle: vertex labels
    :return: triangles as label triples
    """
    remaining = list(cycle)
    triangles = []
    while len(remaining) > 3:
        m = len(remaining)
        for i in range(m):
            a, b, c = remaining[i - 1], remaining[i], remaining[(i + 1) % m]
            pa, pb, pc = points[a], points[b], points[c]
            if orient(pa, pb, pc) <= 0:
                continue
            if any(
                in_triangle(points[w], pa, pb, pc)
                for w in remaining
                if w not in (a, b, c) and points[w] not in (pa, pb, pc)
            ):
                continue
            triangles.append((a, b, c))
            del remaining[i]
            break
        else:
            raise NonSimple(f"No ear left in star cycle {remaining}")
    triangles.append(tuple(remaining))
    return triangles


@TrackingDecorator.track_time
def build_constrained_triangulation(polygon: PiecewiseConvexPolygon) -> ConstrainedTriangulation:
    """
    Builds the constrained triangulation graph of a piecewise-convex polygon:
    crescents are fanned from their first vertex, stars are ear-clipped
    :param polygon: validated polygon
    :return: constrained triangulation
    """
    n = polygon.n
    if n < 3:
        raise DegenerateInput(f"A constrained triangulation needs at least 3 vertices, got {n}")

    rooms = tuple(classify_rooms(polygon))
    edges = {}

    def label(a, b, kind, room=None):
        # Polygon edges keep the index of their arc whatever else they bound
        key = edge_key(a, b)
        if (b - a) % n == 1:
            edges[key] = EdgeInfo(DiagonalKind.BOUNDARY_ARC, a)
        elif (a - b) % n == 1:
            edges[key] = EdgeInfo(DiagonalKind.BOUNDARY_ARC, b)
        elif key not in edges or edges[key].kind is DiagonalKind.STAR_DIAGONAL:
            edges[key] = EdgeInfo(kind, room)

    for i in range(n):
        label(i, (i + 1) % n, DiagonalKind.BOUNDARY_ARC)

    crescent = {}
    for room in rooms:
        chain = room.chain
        for a, b in zip(chain, chain[1:]):
            label(a, b, DiagonalKind.CHAIN_DIAGONAL, room.index)
        if room.status is not RoomStatus.NON_EMPTY:
            continue
        for j in range(2, len(chain) - 1):
            label(chain[0], chain[j], DiagonalKind.WEAK_DIAGONAL, room.index)
        for triangle in crescent_triangles(room):
            crescent[triangle] = room.index

    points = dict(enumerate(polygon.vertices))
    star = []
    for cycle in star_cycles(rooms):
        for triangle in ear_clip(points, cycle):
            star.append(tuple(sorted(triangle)))
            a, b, c = triangle
            for u, v in ((a, b), (b, c), (a, c)):
                label(u, v, DiagonalKind.STAR_DIAGONAL)

    if len(crescent) + len(star) != n - 2:
        raise NonSimple(
            f"Crescents and stars hold {len(crescent) + len(star)} triangles, expected {n - 2}"
        )

    diagonals = [e for e in edges if (e[0] - e[1]) % n not in (1, n - 1)]
    try:
        graph = build_from_diagonals(n, diagonals)
    except GraphError as e:
        raise NonSimple(f"Constrained triangulation is inconsistent: {e}") from e

    classes = {}
    for triangle in graph.triangles:
        if triangle in crescent:
            a, b, c = triangle
            weak = any(
                edges[edge_key(u, v)].kind is DiagonalKind.WEAK_DIAGONAL
                for u, v in ((a, b), (b, c), (a, c))
            )
            classes[triangle] = TriangleClass.WEAK if weak else TriangleClass.CRESCENT
        else:
            classes[triangle] = TriangleClass.STAR

    logger.debug(
        f"constrained triangulation n={n}: {len(crescent)} crescent and {len(star)} star triangles, "
        f"{sum(1 for e in edges.values() if e.kind is DiagonalKind.WEAK_DIAGONAL)} weak diagonals"
    )
    return ConstrainedTriangulation(polygon, rooms, graph, edges, classes)

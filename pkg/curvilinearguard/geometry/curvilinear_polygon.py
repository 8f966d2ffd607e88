import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np
from shapely.geometry import LinearRing, Polygon

from curvilinearguard.errors import InvalidPolygon, NonSimple
from curvilinearguard.geometry.predicates import (
    TOLERANCE,
    as_float,
    cross,
    fcircle_parameters,
    fdistance,
    fsegment_distance,
    fsegment_parameters,
    left_normal,
    squared_distance,
    to_fraction,
)

# Points per arc of the dense ring handed to shapely
RING_SAMPLES = 32


class ArcKind(Enum):
    SEGMENT = "segment"
    CIRCULAR = "circular"


class ArcOrientation(Enum):
    CCW = "ccw"
    CW = "cw"


@dataclass(frozen=True)
class ConvexArc:
    """
    Boundary piece from p to q. A circular piece runs around its center in
    the given orientation; pieces of a valid polygon turn counterclockwise
    and stay below a half circle, so they bulge away from the interior.
    """

    kind: ArcKind
    p: tuple
    q: tuple
    center: Optional[tuple] = None
    orientation: ArcOrientation = ArcOrientation.CCW

    @property
    def is_segment(self):
        return self.kind is ArcKind.SEGMENT

    @property
    def radius_squared(self) -> Fraction:
        return squared_distance(self.p, self.center)

    @property
    def radius(self) -> float:
        return math.sqrt(self.radius_squared)

    def validate(self):
        if self.p == self.q:
            raise InvalidPolygon(f"Arc from {self.p} to itself")
        if self.is_segment:
            return
        if self.center is None:
            raise InvalidPolygon(f"Circular arc {self.p} -> {self.q} has no center")
        rp = squared_distance(self.center, self.p)
        rq = squared_distance(self.center, self.q)
        if rp != rq and abs(float(rp - rq)) > TOLERANCE * max(1.0, float(rp)):
            raise InvalidPolygon(
                f"Center {self.center} is not equidistant from {self.p} and {self.q}"
            )
        if self.orientation is not ArcOrientation.CCW:
            raise InvalidPolygon(
                f"Arc {self.p} -> {self.q} turns clockwise and is concave towards the interior"
            )
        if cross(self.p, self.q, self.center) <= 0:
            raise InvalidPolygon(
                f"Arc {self.p} -> {self.q} spans half a circle or more"
            )

    @property
    def start_angle(self):
        c = as_float(self.center)
        p = as_float(self.p)
        return math.atan2(p[1] - c[1], p[0] - c[0])

    @property
    def sweep(self):
        c = as_float(self.center)
        q = as_float(self.q)
        end = math.atan2(q[1] - c[1], q[0] - c[0])
        return (end - self.start_angle) % (2 * math.pi)

    def point_at(self, t):
        """Point at parameter t in [0, 1], as floats"""
        if self.is_segment:
            p, q = as_float(self.p), as_float(self.q)
            return p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])
        c = as_float(self.center)
        angle = self.start_angle + t * self.sweep
        r = self.radius
        return c[0] + r * math.cos(angle), c[1] + r * math.sin(angle)

    def samples(self, count):
        return [self.point_at(t) for t in np.linspace(0.0, 1.0, max(2, count))]

    def tangent_at(self, t):
        if self.is_segment:
            p, q = as_float(self.p), as_float(self.q)
            return q[0] - p[0], q[1] - p[1]
        c = as_float(self.center)
        x, y = self.point_at(t)
        return -(y - c[1]), x - c[0]

    def _angle_on_arc(self, angle):
        return (angle - self.start_angle) % (2 * math.pi) <= self.sweep

    def distance(self, x):
        """Euclidean distance from the float point x to the arc"""
        if self.is_segment:
            return fsegment_distance(x, as_float(self.p), as_float(self.q))
        c = as_float(self.center)
        if (x[0], x[1]) != c and self._angle_on_arc(math.atan2(x[1] - c[1], x[0] - c[0])):
            return abs(fdistance(x, c) - self.radius)
        return min(fdistance(x, as_float(self.p)), fdistance(x, as_float(self.q)))

    def nearest_point(self, x):
        if self.is_segment:
            p, q = as_float(self.p), as_float(self.q)
            dx, dy = q[0] - p[0], q[1] - p[1]
            t = ((x[0] - p[0]) * dx + (x[1] - p[1]) * dy) / (dx * dx + dy * dy)
            return self.point_at(min(1.0, max(0.0, t)))
        c = as_float(self.center)
        if (x[0], x[1]) != c:
            angle = math.atan2(x[1] - c[1], x[0] - c[0])
            if self._angle_on_arc(angle):
                return self.point_at(((angle - self.start_angle) % (2 * math.pi)) / self.sweep)
        p, q = as_float(self.p), as_float(self.q)
        return p if fdistance(x, p) <= fdistance(x, q) else q

    def bulge_contains(self, x):
        """True if the float point x lies strictly between the chord and the arc"""
        if self.is_segment:
            return False
        p, q, c = as_float(self.p), as_float(self.q), as_float(self.center)
        side = (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0])
        return side < 0 and fdistance(x, c) < self.radius

    def parameters_with(self, a, b):
        """Parameters along the float segment ab where it meets the arc"""
        p, q = as_float(self.p), as_float(self.q)
        if self.is_segment:
            return fsegment_parameters(a, b, p, q)
        found = []
        c = as_float(self.center)
        for t in fcircle_parameters(a, b, c, self.radius):
            x = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            side = (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0])
            if side <= 0 or min(fdistance(x, p), fdistance(x, q)) <= TOLERANCE:
                found.append(t)
        return found

    def x_extreme_points(self):
        """Interior points of the arc where x reaches a local extremum"""
        if self.is_segment:
            return []
        found = []
        for angle in (0.0, math.pi):
            offset = (angle - self.start_angle) % (2 * math.pi)
            if 0 < offset < self.sweep:
                found.append(offset / self.sweep)
        return sorted(found)


def segment(p, q) -> ConvexArc:
    return ConvexArc(ArcKind.SEGMENT, _point(p), _point(q))


def circular(p, q, center, orientation=ArcOrientation.CCW) -> ConvexArc:
    return ConvexArc(ArcKind.CIRCULAR, _point(p), _point(q), _point(center), orientation)


def bulging(p, q, flatness) -> ConvexArc:
    """
    Circular arc from p to q bulging to the right of the chord, its center
    lying flatness chord lengths to the left of the chord midpoint
    :param p: start
    :param q: end
    :param flatness: positive rational, larger values give flatter arcs
    :return: arc
    """
    p, q = _point(p), _point(q)
    flatness = to_fraction(flatness)
    nx, ny = left_normal(p, q)
    center = ((p[0] + q[0]) / 2 + flatness * nx, (p[1] + q[1]) / 2 + flatness * ny)
    return ConvexArc(ArcKind.CIRCULAR, p, q, center)


def _point(value):
    return to_fraction(value[0]), to_fraction(value[1])


class PiecewiseConvexPolygon:
    """
    Counterclockwise cyclic sequence of vertices joined by convex arcs, the
    i-th arc running from vertex i to vertex i+1. Build instances with
    build_polygon.
    """

    def __init__(self, vertices, arcs):
        self.vertices = tuple(vertices)
        self.arcs = tuple(arcs)
        self._shape = None
        self._scale = None

    def __repr__(self):
        return f"PiecewiseConvexPolygon(n={self.n})"

    def __eq__(self, other):
        if not isinstance(other, PiecewiseConvexPolygon):
            return NotImplemented
        return self.vertices == other.vertices and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.vertices, self.arcs))

    @property
    def n(self):
        return len(self.vertices)

    @property
    def outline(self):
        return self

    @property
    def corners(self):
        return tuple(range(self.n))

    def edge_arcs(self, index):
        return (index % self.n,)

    def edge_of_arc(self, arc_index):
        return arc_index % self.n

    def arc(self, index) -> ConvexArc:
        return self.arcs[index % self.n]

    def vertex(self, index):
        return self.vertices[index % self.n]

    @property
    def scale(self):
        if self._scale is None:
            self._scale = max(
                1.0, max(abs(float(c)) for v in self.vertices for c in v)
            )
        return self._scale

    @property
    def tolerance(self):
        return TOLERANCE * self.scale

    def ring(self, per_arc=RING_SAMPLES):
        """Dense float sampling of the boundary, every vertex included once"""
        points = []
        for arc in self.arcs:
            count = 2 if arc.is_segment else per_arc
            points.extend(arc.samples(count)[:-1])
        return points

    @property
    def shape(self) -> Polygon:
        if self._shape is None:
            self._shape = Polygon(self.ring())
        return self._shape

    def bounds(self):
        return self.shape.bounds

    def boundary_distance(self, x):
        return min(arc.distance(x) for arc in self.arcs)

    def interior_contains(self, x):
        """
        Parity test: the straight polygon through the vertices, flipped inside
        every room between an arc and its chord
        """
        inside = False
        n = self.n
        for i in range(n):
            a = as_float(self.vertices[i])
            b = as_float(self.vertices[(i + 1) % n])
            if (a[1] > x[1]) != (b[1] > x[1]):
                at = a[0] + (x[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
                if x[0] < at:
                    inside = not inside
        for arc in self.arcs:
            if arc.bulge_contains(x):
                inside = not inside
        return inside

    def contains(self, x):
        """Membership in the closure of the polygon"""
        return self.interior_contains(x) or self.boundary_distance(x) <= self.tolerance


def build_polygon(vertices, arcs=None) -> PiecewiseConvexPolygon:
    """
    Builds a piecewise-convex polygon and validates it
    :param vertices: counterclockwise vertex points
    :param arcs: one arc per vertex, None for straight edges
    :return: polygon
    """
    vertices = [_point(v) for v in vertices]
    n = len(vertices)
    if n < 2:
        raise InvalidPolygon(f"A polygon needs at least 2 vertices, got {n}")
    if arcs is None:
        arcs = [None] * n
    if len(arcs) != n:
        raise InvalidPolygon(f"Expected {n} arcs, got {len(arcs)}")
    if len(set(vertices)) != n:
        raise InvalidPolygon("Vertices are not pairwise distinct")

    built = []
    for i, arc in enumerate(arcs):
        p, q = vertices[i], vertices[(i + 1) % n]
        if arc is None:
            arc = segment(p, q)
        if arc.p != p or arc.q != q:
            raise InvalidPolygon(f"Arc {i} does not join vertices {i} and {(i + 1) % n}")
        arc.validate()
        built.append(arc)

    if n == 2 and all(arc.is_segment for arc in built):
        raise InvalidPolygon("A two-vertex polygon needs a circular arc")

    polygon = PiecewiseConvexPolygon(vertices, built)
    ring = LinearRing(polygon.ring())
    if not ring.is_simple:
        raise NonSimple("Arcs intersect away from their shared vertices")
    if not ring.is_ccw:
        raise InvalidPolygon("Vertices are not in counterclockwise order")
    return polygon


class LocallyConvexPolygon:
    """
    Polygon whose edges between consecutive corners are chains of convex
    arcs. The arcs of a chain meet at joints turning towards the interior,
    so the boundary is locally convex away from the corners.
    """

    def __init__(self, outline: PiecewiseConvexPolygon, corners):
        self.outline = outline
        self.corners = tuple(corners)

    def __repr__(self):
        return f"LocallyConvexPolygon(n={self.n}, arcs={self.outline.n})"

    @property
    def n(self):
        return len(self.corners)

    @property
    def vertices(self):
        return tuple(self.outline.vertices[c] for c in self.corners)

    def edge_arcs(self, index):
        start = self.corners[index % self.n]
        end = self.corners[(index + 1) % self.n]
        span = (end - start) % self.outline.n or self.outline.n
        return tuple((start + i) % self.outline.n for i in range(span))

    def edge_of_arc(self, arc_index):
        for index in range(self.n):
            if arc_index in self.edge_arcs(index):
                return index
        raise InvalidPolygon(f"Arc {arc_index} belongs to no edge")

    def contains(self, x):
        return self.outline.contains(x)


def build_locally_convex(vertices, arcs, corners) -> LocallyConvexPolygon:
    """
    Builds a locally convex polygon from its arcs and the indices of the
    vertices that are true corners; the remaining vertices are joints
    :param vertices: counterclockwise boundary points
    :param arcs: one arc per boundary point
    :param corners: sorted indices of the corners
    :return: polygon
    """
    outline = build_polygon(vertices, arcs)
    corners = tuple(sorted(set(corners)))
    if len(corners) < 2:
        raise InvalidPolygon("A locally convex polygon needs at least 2 corners")
    if not all(0 <= c < outline.n for c in corners):
        raise InvalidPolygon("Corner index out of range")

    for joint in set(range(outline.n)) - set(corners):
        incoming = outline.arc(joint - 1).tangent_at(1.0)
        outgoing = outline.arc(joint).tangent_at(0.0)
        turn = incoming[0] * outgoing[1] - incoming[1] * outgoing[0]
        scale = math.hypot(*incoming) * math.hypot(*outgoing)
        if turn < -TOLERANCE * scale:
            raise InvalidPolygon(f"Joint {joint} turns away from the interior")
    return LocallyConvexPolygon(outline, corners)

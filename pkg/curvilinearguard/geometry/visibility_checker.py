import logging
import math
from dataclasses import dataclass, field

import numpy as np
import shapely

from curvilinearguard.errors import PointOutside
from curvilinearguard.geometry.curvilinear_polygon import PiecewiseConvexPolygon
from curvilinearguard.geometry.guard_mapper import ArcGuard, DiagonalGuard, GuardSet
from curvilinearguard.geometry.predicates import as_float, fdistance, fsegment_distance
from curvilinearguard.tracking_decorator import TrackingDecorator

logger = logging.getLogger(__name__)

DEFAULT_DENSITY = 50
DEFAULT_ARC_SAMPLES = 64

# Relative depths of the room samples between chord and arc
ROOM_DEPTHS = (0.2, 0.5, 0.8)

SAMPLING_CAVEAT = (
    "Sampled verification can only refute: covered=true means no unguarded sample was found"
)


def _segment_visible(outline: PiecewiseConvexPolygon, p, q):
    """Segment pq stays in the closure, both ends being known to lie in it"""
    if p == q:
        return True
    cuts = {0.0, 1.0}
    for arc in outline.arcs:
        cuts.update(arc.parameters_with(p, q))

    # Vertices touching the segment split it too
    dx, dy = q[0] - p[0], q[1] - p[1]
    length = dx * dx + dy * dy
    for vertex in outline.vertices:
        v = as_float(vertex)
        if fsegment_distance(v, p, q) <= outline.tolerance:
            cuts.add(((v[0] - p[0]) * dx + (v[1] - p[1]) * dy) / length)

    ordered = sorted(t for t in cuts if 0.0 <= t <= 1.0)
    for t0, t1 in zip(ordered, ordered[1:]):
        if t1 - t0 <= 1e-12:
            continue
        t = (t0 + t1) / 2
        if not outline.contains((p[0] + t * dx, p[1] + t * dy)):
            return False
    return True


def is_visible(polygon, p, q) -> bool:
    """
    Tests whether the segment pq lies in the closure of the polygon
    :param polygon: piecewise-convex or locally convex polygon
    :param p: float point in the closure
    :param q: float point in the closure
    :return: True if q is visible from p
    """
    outline = polygon.outline
    p, q = (float(p[0]), float(p[1])), (float(q[0]), float(q[1]))
    for x in (p, q):
        if not outline.contains(x):
            raise PointOutside(f"Point {x} lies outside the polygon")
    return _segment_visible(outline, p, q)


def guard_samples(polygon, guard, arc_samples=DEFAULT_ARC_SAMPLES):
    """Points of a guard, endpoints included"""
    outline = polygon.outline
    if isinstance(guard, ArcGuard):
        return [
            point
            for index in polygon.edge_arcs(guard.index)
            for point in outline.arc(index).samples(arc_samples)
        ]
    a = as_float(polygon.vertices[guard.a])
    b = as_float(polygon.vertices[guard.b])
    return [
        (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
        for t in np.linspace(0.0, 1.0, arc_samples)
    ]


def _adaptive_points(polygon, guard, x):
    """Points of the guard nearest to x and straight above or below it"""
    outline = polygon.outline
    if isinstance(guard, DiagonalGuard):
        a = as_float(polygon.vertices[guard.a])
        b = as_float(polygon.vertices[guard.b])
        dx, dy = b[0] - a[0], b[1] - a[1]
        t = ((x[0] - a[0]) * dx + (x[1] - a[1]) * dy) / (dx * dx + dy * dy)
        t = min(1.0, max(0.0, t))
        return [(a[0] + t * dx, a[1] + t * dy)]

    found = []
    _, miny, _, maxy = outline.bounds()
    low, high = miny - 1.0, maxy + 1.0
    for index in polygon.edge_arcs(guard.index):
        arc = outline.arc(index)
        found.append(arc.nearest_point(x))
        for t in arc.parameters_with((x[0], low), (x[0], high)):
            found.append((x[0], low + t * (high - low)))
    return found


def interior_samples(polygon, density=DEFAULT_DENSITY):
    """
    Grid points inside the polygon plus points spread over every room and
    around every vertex
    :param polygon: piecewise-convex or locally convex polygon
    :param density: grid points per axis
    :return: list of float points
    """
    outline = polygon.outline
    minx, miny, maxx, maxy = outline.bounds()
    xs = np.linspace(minx, maxx, density + 2)[1:-1]
    ys = np.linspace(miny, maxy, density + 2)[1:-1]
    gx, gy = np.meshgrid(xs, ys)
    gx, gy = gx.ravel(), gy.ravel()

    # Coarse filter on the sampled outline, the exact parity test decides
    margin = max(maxx - minx, maxy - miny) * 1e-3
    near = shapely.contains_xy(outline.shape.buffer(margin), gx, gy)
    samples = [(float(x), float(y)) for x, y in zip(gx[near], gy[near])]

    for arc in outline.arcs:
        if arc.is_segment:
            continue
        for t in np.linspace(0.0, 1.0, 7)[1:-1]:
            on_arc = arc.point_at(t)
            p, q = as_float(arc.p), as_float(arc.q)
            on_chord = (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
            for depth in ROOM_DEPTHS:
                samples.append(
                    (
                        on_chord[0] + depth * (on_arc[0] - on_chord[0]),
                        on_chord[1] + depth * (on_arc[1] - on_chord[1]),
                    )
                )

    for index in range(outline.n):
        samples.extend(_vertex_fan(outline, index))

    return [x for x in samples if outline.interior_contains(x)]


def _vertex_fan(outline: PiecewiseConvexPolygon, index):
    vertex = as_float(outline.vertex(index))
    incoming = outline.arc(index - 1).tangent_at(1.0)
    outgoing = outline.arc(index).tangent_at(0.0)
    start = math.atan2(outgoing[1], outgoing[0])
    sector = (math.atan2(-incoming[1], -incoming[0]) - start) % (2 * math.pi)
    reach = min(
        fdistance(vertex, as_float(outline.vertex(index - 1))),
        fdistance(vertex, as_float(outline.vertex(index + 1))),
    )
    points = []
    for fraction in (0.25, 0.5, 0.75):
        angle = start + fraction * sector
        for distance in (0.02 * reach, 0.1 * reach):
            points.append(
                (vertex[0] + distance * math.cos(angle), vertex[1] + distance * math.sin(angle))
            )
    return points


def _sees_guard(polygon, guard_points, guards, x):
    outline = polygon.outline
    candidates = list(guard_points)
    for guard in guards:
        candidates.extend(_adaptive_points(polygon, guard, x))
    candidates.sort(key=lambda g: (g[0] - x[0]) ** 2 + (g[1] - x[1]) ** 2)
    return any(_segment_visible(outline, x, g) for g in candidates)


@dataclass
class VerificationReport:
    covered: bool
    witnesses: list = field(default_factory=list)
    samples: int = 0
    caveat: str = SAMPLING_CAVEAT


def _unguarded(polygon, guard_set: GuardSet, density, arc_samples, first_only):
    samples = interior_samples(polygon, density)
    guard_points = [
        point for guard in guard_set.guards for point in guard_samples(polygon, guard, arc_samples)
    ]
    witnesses = []
    for x in samples:
        if not _sees_guard(polygon, guard_points, guard_set.guards, x):
            witnesses.append(x)
            if first_only:
                break
    return samples, witnesses


@TrackingDecorator.track_time
def verify_guard_set(
    polygon, guard_set: GuardSet, density=DEFAULT_DENSITY, arc_samples=DEFAULT_ARC_SAMPLES
) -> VerificationReport:
    """
    Checks by sampling that every interior sample sees a point of some guard
    :param polygon: piecewise-convex or locally convex polygon
    :param guard_set: guards to check
    :param density: grid points per axis
    :param arc_samples: points sampled along every guard
    :return: report listing the unguarded samples
    """
    samples, witnesses = _unguarded(polygon, guard_set, density, arc_samples, first_only=False)
    if witnesses:
        logger.info(f"{len(witnesses)} of {len(samples)} samples are unguarded")
    return VerificationReport(not witnesses, witnesses, len(samples))


def find_witness(
    polygon, guard_set: GuardSet, density=DEFAULT_DENSITY, arc_samples=DEFAULT_ARC_SAMPLES
):
    """First unguarded sample, or None"""
    _, witnesses = _unguarded(polygon, guard_set, density, arc_samples, first_only=True)
    return witnesses[0] if witnesses else None

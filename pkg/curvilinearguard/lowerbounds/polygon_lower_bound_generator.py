import logging
import math
import random
from fractions import Fraction

from curvilinearguard.errors import GeneratorError, KTooSmall, MTooSmall, NTooSmall
from curvilinearguard.geometry.curvilinear_polygon import (
    LocallyConvexPolygon,
    PiecewiseConvexPolygon,
    build_locally_convex,
    build_polygon,
    bulging,
)
from curvilinearguard.tracking_decorator import TrackingDecorator

logger = logging.getLogger(__name__)

SPIKE_RADIUS = 10
SPIKE_INNER_RADIUS = 3
SPIKE_FLATNESS = Fraction(1, 2)

FAN_RADIUS = 10
FAN_FLATNESS = Fraction(1, 8)

# Chain arcs and end caps of the monotone family
CHAIN_FLATNESS = Fraction(1, 4)
CAP_FLATNESS = Fraction(1, 16)
TIP_HEIGHT = Fraction(3, 10)

RANDOM_WIDTH = 10
JOINT_OFFSET = Fraction(1, 5)

LOCALLY_CONVEX_CASES = ((5, 0), (6, 1), (7, 2), (8, 3), (9, 4))


def _polar(radius, angle):
    """Point on a circle, rounded to a six digit rational"""
    return (
        Fraction(str(round(radius * math.cos(angle), 6))),
        Fraction(str(round(radius * math.sin(angle), 6))),
    )


def _arcs(vertices, flatness_of):
    """One arc per consecutive vertex pair, None where flatness_of gives None"""
    n = len(vertices)
    arcs = []
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        flatness = flatness_of(i)
        arcs.append(None if flatness is None else bulging(p, q, flatness))
    return arcs


@TrackingDecorator.track_time
def gen_spike_polygon(k) -> PiecewiseConvexPolygon:
    """
    Star with k spikes on 3k vertices. Spike i runs from the reflex vertex
    3i out to the vertices 3i+1 and 3i+2 on the outer circle, which are
    joined by a circular arc, and back in to the next reflex vertex. A point
    deep in the room of a tip arc is seen by no point of another spike.
    :param k: number of spikes, at least 3
    :return: polygon
    """
    if k < 3:
        raise KTooSmall(f"A spike polygon needs k >= 3 spikes, got {k}")

    step = 2 * math.pi / k
    spread = math.pi / (3 * k)
    vertices = []
    for i in range(k):
        axis = math.pi / 2 + i * step
        vertices.append(_polar(SPIKE_INNER_RADIUS, axis - step / 2))
        vertices.append(_polar(SPIKE_RADIUS, axis - spread))
        vertices.append(_polar(SPIKE_RADIUS, axis + spread))

    arcs = _arcs(vertices, lambda i: SPIKE_FLATNESS if i % 3 == 1 else None)
    logger.debug(f"spike polygon k={k}: n={3 * k}")
    return build_polygon(vertices, arcs)


def spike_arc(i):
    """Index of the tip arc of spike i"""
    return 3 * i + 1


@TrackingDecorator.track_time
def gen_fan_polygon(n) -> PiecewiseConvexPolygon:
    """
    Regular n-gon whose every edge is replaced by a deep circular arc, so
    that every vertex is reflex and every edge bounds a spike of its own
    :param n: number of vertices, at least 3
    :return: polygon
    """
    if n < 3:
        raise NTooSmall(f"A fan polygon needs n >= 3 vertices, got {n}")

    vertices = [_polar(FAN_RADIUS, math.pi / 2 + 2 * math.pi * s / n) for s in range(n)]
    arcs = _arcs(vertices, lambda i: FAN_FLATNESS)
    logger.debug(f"fan polygon n={n}")
    return build_polygon(vertices, arcs)


def _monotone_height(j, n):
    upper = j % 2 == 1
    if j in (1, 2, n - 1, n):
        return TIP_HEIGHT if upper else Fraction(0)
    return Fraction(0) if upper else TIP_HEIGHT


@TrackingDecorator.track_time
def gen_monotone_lb(variant, m) -> PiecewiseConvexPolygon:
    """
    x-monotone polygon with vertices u_1..u_n at x = j, the odd ones on the
    upper chain and the even ones on the lower chain. Inside the caps the
    upper vertices dip to height 0 and the lower ones rise to 3/10, so the
    chain arcs form pockets next to every vertex that only the few edges
    around it see. For n = 2m+5 every edge the monotone selector picks is
    needed. For n = 2m+4 the pocket past u_n is also seen from u_(n-1),
    so the selector's right cap can be dropped.
    :param variant: 1 for n = 2m+5, 2 for n = 2m+4
    :param m: size parameter, at least 0
    :return: polygon
    """
    if variant not in (1, 2):
        raise GeneratorError(f"Unknown variant {variant}, expected 1 or 2")
    if m < 0:
        raise MTooSmall(f"The monotone family needs m >= 0, got {m}")

    n = 2 * m + 5 if variant == 1 else 2 * m + 4
    lower = [j for j in range(2, n + 1, 2)]
    upper = [j for j in range(n if n % 2 == 1 else n - 1, 0, -2)]
    order = lower + upper
    vertices = [(Fraction(j), _monotone_height(j, n)) for j in order]

    # Caps join the two chains at both ends
    caps = {len(lower) - 1, len(order) - 1}
    arcs = _arcs(vertices, lambda i: CAP_FLATNESS if i in caps else CHAIN_FLATNESS)
    logger.debug(f"monotone lower bound variant={variant} m={m}: n={n}")
    return build_polygon(vertices, arcs)


def random_monotone_polygon(n, seed=0, curved=True) -> PiecewiseConvexPolygon:
    """
    Random x-monotone polygon spanning (0, 0) to (10, 0): every other vertex
    is put above or below the axis at random, flat enough edges turn into
    circular arcs half of the time
    :param n: number of vertices, at least 3
    :param seed: seed of the generator
    :param curved: allow circular arcs
    :return: polygon
    """
    if n < 3:
        raise NTooSmall(f"A random monotone polygon needs n >= 3 vertices, got {n}")

    rng = random.Random(seed)
    xs = sorted(rng.sample(range(1, RANDOM_WIDTH * n), n - 2))
    lower, upper = [], []
    for x in xs:
        on_upper = rng.random() < 0.5
        y = Fraction(rng.randint(10, 30), 10)
        if on_upper:
            upper.append((Fraction(x, n), y))
        else:
            lower.append((Fraction(x, n), -y))

    left, right = (Fraction(0), Fraction(0)), (Fraction(RANDOM_WIDTH), Fraction(0))
    vertices = [left] + lower + [right] + list(reversed(upper))

    def flatness_of(i):
        p, q = vertices[i], vertices[(i + 1) % n]
        flat = abs(q[1] - p[1]) <= abs(q[0] - p[0])
        if curved and flat and rng.random() < 0.5:
            return 1
        return None

    return build_polygon(vertices, _arcs(vertices, flatness_of))


def split_edges(polygon: PiecewiseConvexPolygon, offset=JOINT_OFFSET) -> LocallyConvexPolygon:
    """
    Splits every straight edge of an x-monotone polygon at a joint pushed
    vertically away from the interior
    :param polygon: x-monotone polygon
    :param offset: vertical push of the joints
    :return: locally convex polygon with the original vertices as corners
    """
    vertices, arcs, corners = [], [], []
    for arc in polygon.arcs:
        p, q = arc.p, arc.q
        corners.append(len(vertices))
        vertices.append(p)
        if not arc.is_segment:
            arcs.append(arc)
            continue
        # Lower chain edges run to the right and are pushed down
        push = -offset if q[0] > p[0] else offset
        vertices.append(((p[0] + q[0]) / 2, (p[1] + q[1]) / 2 + push))
        arcs.extend([None, None])
    return build_locally_convex(vertices, arcs, corners)


def locally_convex_fixtures():
    """Five x-monotone locally convex polygons with joints on their straight edges"""
    return [
        split_edges(random_monotone_polygon(n, seed, curved=True))
        for n, seed in LOCALLY_CONVEX_CASES
    ]

import math
from fractions import Fraction

# Absolute tolerance of the floating point circle predicates
TOLERANCE = 1e-9


def to_fraction(value) -> Fraction:
    """
    Converts a coordinate to an exact rational, going through the decimal
    string so that 0.1 stays one tenth
    :param value: int, float, Fraction or decimal string
    :return: rational value
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))


def point(x, y):
    return to_fraction(x), to_fraction(y)


def orient(a, b, c):
    """
    Sign of the turn a -> b -> c, exact on rational input
    :return: 1 for a left turn, -1 for a right turn, 0 if collinear
    """
    value = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (value > 0) - (value < 0)


def cross(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def squared_distance(a, b):
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


def on_segment(p, a, b):
    """Closed segment membership, exact"""
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
        a[1], b[1]
    )


def on_open_segment(p, a, b):
    return p != a and p != b and on_segment(p, a, b)


def in_triangle(p, a, b, c):
    """Closed triangle membership for a counterclockwise triangle, exact"""
    return orient(a, b, p) >= 0 and orient(b, c, p) >= 0 and orient(c, a, p) >= 0


def left_normal(a, b):
    return a[1] - b[1], b[0] - a[0]


def as_float(p):
    return float(p[0]), float(p[1])


#
# Floating point helpers
#


def fdistance(a, b):
    return math.hypot(a[0] - b[0], a[1] - b[1])


def fsegment_distance(p, a, b):
    """Distance from p to the closed segment ab"""
    dx, dy = b[0] - a[0], b[1] - a[1]
    length = dx * dx + dy * dy
    if length == 0:
        return fdistance(p, a)
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / length
    t = min(1.0, max(0.0, t))
    return fdistance(p, (a[0] + t * dx, a[1] + t * dy))


def fsegment_parameters(p, q, a, b):
    """
    Parameters t along pq where pq meets the segment ab; an overlap yields
    the parameters of its two ends
    """
    rx, ry = q[0] - p[0], q[1] - p[1]
    sx, sy = b[0] - a[0], b[1] - a[1]
    denominator = rx * sy - ry * sx
    qx, qy = a[0] - p[0], a[1] - p[1]
    length = rx * rx + ry * ry
    if abs(denominator) <= TOLERANCE * max(1.0, length):
        # Parallel, keep the ends of a collinear overlap
        if abs(qx * ry - qy * rx) > TOLERANCE * max(1.0, math.sqrt(length)):
            return []
        found = []
        for end in (a, b):
            t = ((end[0] - p[0]) * rx + (end[1] - p[1]) * ry) / length
            if -TOLERANCE <= t <= 1 + TOLERANCE:
                found.append(t)
        return found
    t = (qx * sy - qy * sx) / denominator
    u = (qx * ry - qy * rx) / denominator
    if -TOLERANCE <= t <= 1 + TOLERANCE and -TOLERANCE <= u <= 1 + TOLERANCE:
        return [t]
    return []


def fcircle_parameters(p, q, center, radius):
    """Parameters t in [0, 1] where the segment pq meets the circle"""
    dx, dy = q[0] - p[0], q[1] - p[1]
    fx, fy = p[0] - center[0], p[1] - center[1]
    a = dx * dx + dy * dy
    b = 2 * (fx * dx + fy * dy)
    c = fx * fx + fy * fy - radius * radius
    discriminant = b * b - 4 * a * c
    if discriminant < -TOLERANCE:
        return []
    root = math.sqrt(max(0.0, discriminant))
    found = []
    for t in ((-b - root) / (2 * a), (-b + root) / (2 * a)):
        if -TOLERANCE <= t <= 1 + TOLERANCE:
            found.append(t)
    return found

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from dacite import Config

from curvilinearguard.config.graph_loader import read_json_file, record_of
from curvilinearguard.errors import FormatError
from curvilinearguard.geometry.curvilinear_polygon import (
    ArcOrientation,
    LocallyConvexPolygon,
    build_locally_convex,
    build_polygon,
    circular,
)
from curvilinearguard.geometry.guard_mapper import (
    ArcGuard,
    DiagonalGuard,
    GuardMode,
    GuardSet,
)
from curvilinearguard.geometry.predicates import to_fraction

# Largest power of ten tried before a coordinate is written as a ratio
MAX_DECIMALS = 40


def coordinate(value) -> Fraction:
    """Type hook reading decimal strings, integers and "p/q" ratios exactly"""
    if isinstance(value, bool):
        raise FormatError(f"Coordinate {value} is not a number")
    try:
        return to_fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError(f"Coordinate {value!r} is not a decimal number") from e


@dataclass
class ArcRecord:
    type: str = "segment"
    center: Optional[List[Fraction]] = None
    orientation: Optional[str] = "ccw"


@dataclass
class PolygonRecord:
    vertices: List[List[Fraction]]
    arcs: Optional[List[ArcRecord]] = None
    corners: Optional[List[int]] = None


@dataclass
class GuardRecord:
    arc: Optional[int] = None
    diagonal: Optional[List[int]] = None


@dataclass
class GuardSetRecord:
    mode: str
    guards: List[GuardRecord] = field(default_factory=list)


COORDINATES = Config(type_hooks={Fraction: coordinate})


def _point(row):
    if len(row) != 2:
        raise FormatError(f"A point needs two coordinates, got {row}")
    return row[0], row[1]


def _arc(record: ArcRecord, p, q):
    if record.type == "segment":
        return None
    if record.type != "circular":
        raise FormatError(f"Unknown arc type {record.type}, expected segment or circular")
    if record.center is None:
        raise FormatError("A circular arc needs a center")
    try:
        orientation = ArcOrientation(record.orientation or "ccw")
    except ValueError as e:
        raise FormatError(f"Unknown orientation {record.orientation}") from e
    return circular(p, q, _point(record.center), orientation)


def polygon_from_data(data):
    """
    Polygon from its JSON form; a corners list makes it locally convex
    :param data: parsed JSON object
    :return: validated polygon
    """
    record = record_of(PolygonRecord, data, COORDINATES)
    vertices = [_point(row) for row in record.vertices]
    n = len(vertices)
    arcs = None
    if record.arcs is not None:
        if len(record.arcs) != n:
            raise FormatError(f"Expected {n} arcs, got {len(record.arcs)}")
        arcs = [_arc(a, vertices[i], vertices[(i + 1) % n]) for i, a in enumerate(record.arcs)]
    if record.corners is not None:
        return build_locally_convex(vertices, arcs or [None] * n, record.corners)
    return build_polygon(vertices, arcs)


def fraction_text(value) -> str:
    """Exact decimal string, or "p/q" when no finite decimal exists"""
    value = Fraction(value)
    decimals = 0
    while (10**decimals) % value.denominator and decimals < MAX_DECIMALS:
        decimals += 1
    if (10**decimals) % value.denominator:
        return f"{value.numerator}/{value.denominator}"
    scaled = value.numerator * (10**decimals // value.denominator)
    sign, digits = ("-" if scaled < 0 else ""), str(abs(scaled))
    if decimals == 0:
        return sign + digits
    digits = digits.rjust(decimals + 1, "0")
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


def _point_data(p):
    return [fraction_text(p[0]), fraction_text(p[1])]


def polygon_to_data(polygon):
    outline = polygon.outline
    arcs = []
    for arc in outline.arcs:
        if arc.is_segment:
            arcs.append({"type": "segment"})
        else:
            arcs.append(
                {
                    "type": "circular",
                    "center": _point_data(arc.center),
                    "orientation": arc.orientation.value,
                }
            )
    data = {"vertices": [_point_data(v) for v in outline.vertices], "arcs": arcs}
    if isinstance(polygon, LocallyConvexPolygon):
        data["corners"] = list(polygon.corners)
    return data


def load_polygon(path):
    """
    Loads a polygon file {"vertices": [[x, y], ..], "arcs": [..]}
    :param path: polygon JSON file
    :return: validated polygon
    """
    return polygon_from_data(read_json_file(path))


def guard_set_from_data(data) -> GuardSet:
    record = record_of(GuardSetRecord, data)
    try:
        mode = GuardMode(record.mode)
    except ValueError as e:
        raise FormatError(f"Unknown guard mode {record.mode}, expected mobile or edge") from e

    guards = []
    for guard in record.guards:
        if (guard.arc is None) == (guard.diagonal is None):
            raise FormatError("Every guard is either an arc or a diagonal")
        if guard.arc is not None:
            guards.append(ArcGuard(guard.arc))
        elif len(guard.diagonal) != 2:
            raise FormatError(f"A diagonal guard needs two vertices, got {guard.diagonal}")
        else:
            guards.append(DiagonalGuard.of(*guard.diagonal))
    return GuardSet.of(mode, guards)


def guard_set_to_data(guard_set: GuardSet):
    guards = []
    for guard in guard_set.guards:
        if isinstance(guard, ArcGuard):
            guards.append({"arc": guard.index})
        else:
            guards.append({"diagonal": [guard.a, guard.b]})
    return {"mode": guard_set.mode.value, "guards": guards}


def load_guard_set(path) -> GuardSet:
    return guard_set_from_data(read_json_file(path))

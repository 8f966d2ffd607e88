import logging

from curvilinearguard.errors import GeneratorError, MTooSmall
from curvilinearguard.tracking_decorator import TrackingDecorator
from curvilinearguard.trigraph.triangulation_graph import (
    TriangulationGraph,
    build_from_diagonals,
    edge_key,
)

logger = logging.getLogger(__name__)

# Diagonals of the gadget closing an edge guard family, in local labels 0..size
# where 0 is the gadget's first corner and size its wrap-around corner
EDGE_GADGETS = {
    0: [(1, 4), (1, 3), (1, 5)],
    1: [(0, 2), (0, 3), (0, 4), (0, 5)],
    3: [(1, 4), (4, 7), (1, 7), (1, 3), (4, 6), (0, 7)],
    4: [(0, i) for i in range(2, 9)],
}

# Seven-gon whose edge (6, 0) is glued onto edge (0, 1) of the next copy
GLUE_GADGET = [(0, 2), (0, 5), (2, 4), (2, 5)]


def _collect(n, chords):
    """Canonical diagonals, boundary edges and repeated chords dropped"""
    found = set()
    for a, b in chords:
        a, b = a % n, b % n
        if a == b or (a - b) % n in (1, n - 1):
            continue
        found.add(edge_key(a, b))
    return sorted(found)


def _fan(corners):
    """Fan of a convex sub-polygon from its first corner"""
    return [(corners[0], c) for c in corners[2:-1]]


@TrackingDecorator.track_time
def gen_diag_lb(m, variant) -> TriangulationGraph:
    """
    Triangulation graph on n = 3m + variant - 1 vertices that needs
    floor((n+1)/3) diagonal guards: m quadrilaterals (3j, 3j+1, 3j+2, 3j+3)
    hang off a central polygon, each needing a member of its own. Variant 3
    closes the chain with the extra vertex 3m+1 so that the last two gadgets
    and the central part form a hexagon asking for one more member.
    :param m: number of quadrilateral gadgets, at least 2
    :param variant: 1, 2 or 3
    :return: triangulation graph
    """
    if m < 2:
        raise MTooSmall(f"The diagonal lower bound family needs m >= 2, got {m}")
    if variant not in (1, 2, 3):
        raise GeneratorError(f"Unknown variant {variant}, expected 1, 2 or 3")

    n = 3 * m + variant - 1
    chords = []
    for j in range(m):
        a = 3 * j
        chords.append((a, a + 2))
        chords.append((a, a + 3))

    central = list(range(0, 3 * m + 1, 3)) + list(range(3 * m + 1, n))
    central = sorted({c % n for c in central})
    chords.extend(_fan(central))

    logger.debug(f"diagonal lower bound m={m} variant={variant}: n={n}")
    return build_from_diagonals(n, _collect(n, chords))


@TrackingDecorator.track_time
def gen_edge_lb(m, residue) -> TriangulationGraph:
    """
    Triangulation graph on n = 5(m+1) + residue vertices that needs
    floor((2n+1)/5) edge guards: m hexagons with the diagonals (1,3), (1,4),
    (1,5) need two boundary edges each, and a closing hexagon, heptagon,
    enneagon or decagon picked by the residue needs two or three more.
    :param m: number of hexagon gadgets before the closing one, at least 1
    :param residue: 0, 1, 3 or 4
    :return: triangulation graph
    """
    if m < 1:
        raise MTooSmall(f"The edge lower bound family needs m >= 1, got {m}")
    if residue not in EDGE_GADGETS:
        raise GeneratorError(f"Unsupported residue {residue}, expected one of 0, 1, 3, 4")

    n = 5 * (m + 1) + residue
    chords = []
    for j in range(m):
        a = 5 * j
        chords.extend((a + x, a + y) for x, y in EDGE_GADGETS[0])
        chords.append((a, a + 5))

    start, size = 5 * m, 5 + residue
    chords.extend((start + x, start + y) for x, y in EDGE_GADGETS[residue])
    chords.append((start, start + size))

    chords.extend(_fan(list(range(0, 5 * m + 1, 5))))

    logger.debug(f"edge lower bound m={m} residue={residue}: n={n}")
    return build_from_diagonals(n, _collect(n, chords))


@TrackingDecorator.track_time
def gen_edge_lb_glued(m) -> TriangulationGraph:
    """
    Triangulation graph on 5m + 2 vertices built from m copies of a seven-gon
    that needs three edge guards on its own. Each step glues a fresh copy on
    vertices 0..6 to the previous graph, whose vertex 0 stays 0 and whose
    vertex i >= 1 becomes i + 5; the glued edge becomes the diagonal (0, 6).
    :param m: number of copies, at least 1
    :return: triangulation graph
    """
    if m < 1:
        raise MTooSmall(f"The glued family needs m >= 1, got {m}")

    n, diagonals = 7, list(GLUE_GADGET)
    for _ in range(m - 1):
        moved = [(_shift(a), _shift(b)) for a, b in diagonals]
        diagonals = moved + [(0, 6)] + list(GLUE_GADGET)
        n += 5

    logger.debug(f"glued edge lower bound m={m}: n={n}")
    return build_from_diagonals(n, diagonals)


def _shift(v):
    return 0 if v == 0 else v + 5

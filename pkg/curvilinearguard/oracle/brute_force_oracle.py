from dataclasses import dataclass

from curvilinearguard.errors import NTooLarge
from curvilinearguard.tracking_decorator import TrackingDecorator
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    TriangulationGraph,
)

MAX_ORACLE_SIZE = 14


@dataclass(frozen=True)
class OracleResult:
    size: int
    witness: DominatingSet


def candidate_pool(graph: TriangulationGraph, mode: Mode):
    """Members available in a mode, in lexicographic order"""
    if mode is Mode.EDGE:
        return sorted(graph.boundary_edges)
    return graph.edges


@TrackingDecorator.track_time
def min_2dominating_set(graph: TriangulationGraph, mode: Mode) -> OracleResult:
    """
    Minimum 2-dominating set by iterative deepening over the number of
    members. Validity depends only on the covered vertices, so search states
    are vertex bitmasks; every branch covers an endpoint of an edge whose
    endpoints are both uncovered.
    :param graph: triangulation graph with at most 14 vertices
    :param mode: diagonal or edge guards
    :return: size and a witness
    """
    if graph.n > MAX_ORACLE_SIZE:
        raise NTooLarge(f"The oracle is limited to n <= {MAX_ORACLE_SIZE}, got {graph.n}")

    pool = candidate_pool(graph, mode)
    search = _MaskSearch(graph, pool)

    for limit in range(1, len(pool) + 1):
        chosen = search.run(limit)
        if chosen is not None:
            witness = DominatingSet.of(mode, [pool[i] for i in chosen])
            return OracleResult(size=len(witness), witness=witness)

    raise AssertionError("The full candidate pool always 2-dominates")


class _MaskSearch:
    def __init__(self, graph: TriangulationGraph, pool):
        self.pool = pool
        self.bits = [(1 << a) | (1 << b) for a, b in pool]
        self.edges = [(a, b, (1 << a) | (1 << b)) for a, b in graph.edges]
        self.incident = [[] for _ in range(graph.n)]
        for index, (a, b) in enumerate(pool):
            self.incident[a].append(index)
            self.incident[b].append(index)
        self.seen = {}

    def run(self, limit):
        self.seen = {}
        return self._search(0, limit, [])

    def _search(self, mask, remaining, chosen):
        open_edges = [(a, b) for a, b, bits in self.edges if not mask & bits]
        if not open_edges:
            return list(chosen)
        if remaining == 0 or self._lower_bound(open_edges) > remaining:
            return None
        if self.seen.get(mask, -1) >= remaining:
            return None
        self.seen[mask] = remaining

        options = None
        for a, b in open_edges:
            found = sorted(set(self.incident[a]) | set(self.incident[b]))
            if options is None or len(found) < len(options):
                options = found

        for index in options:
            chosen.append(index)
            result = self._search(mask | self.bits[index], remaining - 1, chosen)
            chosen.pop()
            if result is not None:
                return result
        return None

    @staticmethod
    def _lower_bound(open_edges):
        # Disjoint open edges need distinct covered vertices, two per member
        used = set()
        matching = 0
        for a, b in open_edges:
            if a not in used and b not in used:
                used.update((a, b))
                matching += 1
        return (matching + 1) // 2

import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable

from curvilinearguard.dominate.local_view import (
    LocalFrame,
    LocalSet,
    MemberTable,
    Reduction,
)
from curvilinearguard.dominate.recursive_engine import EngineStats
from curvilinearguard.dominate.rewrite_search import search_rewrite
from curvilinearguard.dominate.working_triangulation import (
    Candidate,
    TrianglePatch,
    WorkingTriangulation,
)
from curvilinearguard.errors import RuleNotApplicable
from curvilinearguard.trigraph.subtree_shape_classifier import canonical_subtree
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    TriangulationGraph,
    edge_key,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Level:
    reduction: Reduction
    patch: TrianglePatch
    # Boundary edges e0..e(k-1) of the side
    boundary: frozenset
    # Edges of the side that are diagonals of the polygon at this level
    inner: frozenset
    # Boundary edges leaving v0 and vk away from the side
    outer: frozenset
    ends: tuple
    size: int


class QueueEngine:
    """
    Linear time reduction driven by a FIFO queue of diagonals whose small side
    is a minimal configuration. Every pop does constant work: the side is
    re-matched, cut off, and only diagonals near the cut are offered again.
    Rewrites are checked on the triangles of the side alone.
    """

    def __init__(self, name, mode: Mode, lam, cutoff, planner, base: Callable, bound):
        self.name = name
        self.mode = mode
        self.lam = lam
        self.cutoff = cutoff
        self.planner = planner
        self.base = base
        self.bound = bound

    def solve(self, graph: TriangulationGraph, stats: EngineStats = None) -> DominatingSet:
        stats = stats if stats is not None else EngineStats()
        work = WorkingTriangulation(graph)
        queue = deque()
        queued = set()
        for diagonal in graph.diagonals:
            self._offer(work, diagonal, queue, queued)

        levels = []
        while work.size >= self.cutoff:
            if not queue:
                stats.rescans += 1
                logger.warning(f"{self.name} m={work.size}: queue empty, rescanning")
                for diagonal in work.interior_edges():
                    self._offer(work, diagonal, queue, queued)
                if not queue:
                    logger.warning(f"{self.name} m={work.size}: no minimal side left")
                    break
                continue

            diagonal = queue.popleft()
            queued.discard(diagonal)
            stats.pops += 1
            candidate = work.match(diagonal, self.lam)
            if candidate is None:
                continue
            levels.append(self._reduce(work, candidate, queue, queued))
            stats.reductions += 1

        reduced = work.extract()
        solved = self.base(reduced, stats)
        table = MemberTable(
            edge_key(reduced.label(a), reduced.label(b)) for a, b in solved.members
        )
        for level in reversed(levels):
            self._expand(level, table, stats)
        return DominatingSet(self.mode, frozenset(table.members))

    def _offer(self, work, diagonal, queue, queued):
        if diagonal not in queued and work.match(diagonal, self.lam) is not None:
            queue.append(diagonal)
            queued.add(diagonal)

    def _reduce(self, work: WorkingTriangulation, candidate: Candidate, queue, queued):
        side = work.side_triangles(candidate)
        patch = TrianglePatch(work.triangles[t] for t in side)
        frame = LocalFrame(patch, candidate.walk)
        try:
            reduction = self.planner(frame)
        except RuleNotApplicable as e:
            logger.warning(
                f"{self.name} m={work.size} k={candidate.k}: {e}, cutting the whole side"
            )
            reduction = Reduction("remainder", frame)

        walk = candidate.walk
        boundary = frozenset(edge_key(a, b) for a, b in zip(walk, walk[1:]))
        first, last = walk[0], walk[-1]
        level = _Level(
            reduction=reduction,
            patch=patch,
            boundary=boundary,
            inner=patch.edges - boundary,
            outer=frozenset(
                (edge_key(work.pred[first], first), edge_key(last, work.succ[last]))
            ),
            ends=(first, last),
            size=work.size,
        )

        kept = work.cut(candidate, side, reduction.kept_vertices())
        self._explore(work, kept + work.alive_on(candidate.diagonal), queue, queued)
        return level

    def _explore(self, work: WorkingTriangulation, seeds, queue, queued):
        # New minimal sides contain a triangle next to the cut
        cap = 2 * self.lam - 3
        visited = set()
        stack = [(seed, None) for seed in seeds]
        while stack:
            triangle, via = stack.pop()
            for edge, neighbour in work.links(triangle):
                if edge == via or (triangle, edge) in visited:
                    continue
                visited.add((triangle, edge))
                if canonical_subtree(triangle, edge, work.links, cap) is None:
                    continue
                self._offer(work, edge, queue, queued)
                stack.append((neighbour, edge))

    def _expand(self, level: _Level, table: MemberTable, stats: EngineStats):
        reduction = level.reduction
        bound = self.bound(level.size)
        if reduction.rewrite is not None:
            try:
                rewrite = reduction.rewrite(LocalSet(reduction.frame, table))
                removed, added = rewrite.effective(table)
                if self._locally_valid(level, table, removed, added, bound):
                    table.apply(rewrite)
                    return
                logger.warning(
                    f"{self.name} m={level.size} {reduction.trace()} case={rewrite.case}: "
                    f"rewrite rejected, searching locally"
                )
            except RuleNotApplicable as e:
                logger.warning(f"{self.name} m={level.size} {reduction.trace()}: {e}")
            stats.rule_failures += 1

        self._fallback(level, table, bound, stats)

    def _locally_valid(self, level: _Level, table: MemberTable, removed, added, bound):
        if len(table) - len(removed) + len(added) > bound:
            return False
        if not removed <= level.patch.edges:
            return False

        allowed = level.patch.edges | level.outer
        if self.mode is Mode.EDGE:
            allowed = level.boundary | level.outer
            for edge in level.inner:
                if table.has(*edge) and edge not in removed:
                    return False
        if not added <= allowed:
            return False

        for a, b in level.patch.edges:
            if not (
                table.covered_after(a, removed, added)
                or table.covered_after(b, removed, added)
            ):
                return False
        return all(
            table.covered_after(v, removed, added)
            for v in level.ends
            if table.covered(v)
        )

    def _fallback(self, level: _Level, table: MemberTable, bound, stats: EngineStats):
        forced_out = set()
        candidates = level.patch.edges | level.outer
        if self.mode is Mode.EDGE:
            forced_out = {edge for edge in level.inner if table.has(*edge)}
            candidates = level.boundary | level.outer

        def accepts(removed, added):
            return self._locally_valid(level, table, removed, added, bound)

        stats.searches += 1
        rewrite = search_rewrite(
            table, forced_out, level.patch.edges, candidates, bound, accepts
        )
        if rewrite is not None:
            table.apply(rewrite)
            return

        stats.over_bound += 1
        logger.error(
            f"{self.name} m={level.size} {level.reduction.trace()}: result exceeds the bound"
        )
        for edge in forced_out:
            table.remove(edge)
        for edge in level.boundary:
            table.add(edge)

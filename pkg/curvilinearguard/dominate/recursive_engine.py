import logging
from dataclasses import dataclass, field
from typing import Callable

from curvilinearguard.dominate.local_view import (
    LocalFrame,
    LocalSet,
    MemberTable,
    Reduction,
)
from curvilinearguard.dominate.rewrite_search import search_rewrite
from curvilinearguard.errors import RuleNotApplicable
from curvilinearguard.oracle.brute_force_oracle import (
    MAX_ORACLE_SIZE,
    min_2dominating_set,
)
from curvilinearguard.trigraph.edge_contractor import (
    contract_edge,
    lift_dominating_set,
)
from curvilinearguard.trigraph.graph_splitter import (
    find_separating_diagonal,
    side_start,
    split_side,
    subpolygon,
)
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    TriangulationGraph,
    edge_key,
    is_2_dominated,
)

logger = logging.getLogger(__name__)


@dataclass
class EngineStats:
    pops: int = 0
    reductions: int = 0
    rescans: int = 0
    rule_failures: int = 0
    searches: int = 0
    oracle_calls: int = 0
    over_bound: int = 0

    def merge(self, other: "EngineStats"):
        for name in self.__dataclass_fields__:
            setattr(self, name, getattr(self, name) + getattr(other, name))


@dataclass
class _Step:
    graph: TriangulationGraph
    reduction: Reduction
    child: TriangulationGraph
    lift: Callable = field(repr=False)


class RecursiveEngine:
    """
    Divide and conquer on immutable graphs: cut off a minimal side, solve the
    reduced graph, rewrite its dominating set. Every level is checked in full,
    so a level costs O(n) and a run O(n^2).
    """

    def __init__(self, name, mode: Mode, lam, cutoff, planner, base, bound):
        self.name = name
        self.mode = mode
        self.lam = lam
        self.cutoff = cutoff
        self.planner = planner
        self.base = base
        self.bound = bound

    def solve(self, graph: TriangulationGraph, stats: EngineStats = None) -> DominatingSet:
        stats = stats if stats is not None else EngineStats()
        steps = []
        current = graph
        while current.n >= self.cutoff:
            step = self._reduce(current)
            steps.append(step)
            stats.reductions += 1
            current = step.child

        members = set(self.base(current).members)
        while steps:
            members = self._expand(steps.pop(), members, stats)
        return DominatingSet(self.mode, frozenset(members))

    def _reduce(self, graph: TriangulationGraph) -> _Step:
        n = graph.n
        separation = find_separating_diagonal(graph, self.lam)
        start = side_start(graph, separation)
        k = separation.k
        frame = LocalFrame(graph, [(start + i) % n for i in range(k + 1)])

        try:
            reduction = self.planner(frame)
        except RuleNotApplicable as e:
            logger.warning(f"{self.name} n={n} k={k}: {e}, solving the remainder instead")
            reduction = Reduction("remainder", frame)

        end = (start + k) % n
        if reduction.contract_at is None:
            vertices = {(end + i) % n for i in range(n - k + 1)}
            vertices.update(reduction.kept_vertices())
            ordered = sorted(vertices, key=lambda v: (v - end) % n)
            child = subpolygon(graph, ordered)

            def lift(members, child=child):
                return {edge_key(child.label(a), child.label(b)) for a, b in members}

            return _Step(graph, reduction, child, lift)

        _, rest = split_side(graph, start, k)
        separating = (0, n - k)
        child, merge_map = contract_edge(rest, separating)
        guard = (reduction.frame.v(reduction.contract_at) - end) % n

        def lift(members, rest=rest, merge_map=merge_map, guard=guard):
            lifted = lift_dominating_set(
                rest,
                DominatingSet(self.mode, frozenset(members)),
                merge_map,
                guard,
                excluded_edge=separating,
            )
            return {
                edge_key(rest.label(a), rest.label(b))
                for a, b in lifted.dominating_set.members
            }

        return _Step(graph, reduction, child, lift)

    def _expand(self, step: _Step, child_members, stats: EngineStats):
        graph = step.graph
        reduction = step.reduction
        table = MemberTable(step.lift(child_members))
        bound = self.bound(graph.n)

        if reduction.rewrite is not None:
            try:
                rewrite = reduction.rewrite(LocalSet(reduction.frame, table))
                table_members = set(table.members)
                candidate = (table_members - rewrite.remove) | rewrite.add
                if self._acceptable(graph, candidate, bound):
                    return candidate
                logger.warning(
                    f"{self.name} n={graph.n} {reduction.trace()} case={rewrite.case}: "
                    f"rewrite rejected, searching locally"
                )
            except RuleNotApplicable as e:
                logger.warning(f"{self.name} n={graph.n} {reduction.trace()}: {e}")
            stats.rule_failures += 1

        return self._fallback(graph, reduction.frame, table, bound, stats)

    def _acceptable(self, graph: TriangulationGraph, members, bound):
        if len(members) > bound:
            return False
        if not all(graph.has_edge(*m) for m in members):
            return False
        if self.mode is Mode.EDGE and not all(graph.is_boundary(*m) for m in members):
            return False
        return is_2_dominated(graph, DominatingSet(self.mode, frozenset(members)))

    def _fallback(self, graph, frame: LocalFrame, table: MemberTable, bound, stats):
        n = graph.n
        side = [frame.v(i) for i in range(frame.k + 1)]
        region = {
            edge_key(a, b)
            for index, a in enumerate(side)
            for b in side[index + 1 :]
            if graph.has_edge(a, b)
        }
        forced_out = set()
        if self.mode is Mode.EDGE:
            forced_out = {m for m in table.members if not graph.is_boundary(*m)}
            candidates = {m for m in region if graph.is_boundary(*m)}
        else:
            candidates = set(region)
        for end in (side[0], side[-1]):
            candidates.add(edge_key(end, (end + 1) % n))
            candidates.add(edge_key(end, (end - 1) % n))

        def accepts(removed, added):
            members = (table.members - removed) | added
            return is_2_dominated(graph, DominatingSet(self.mode, frozenset(members)))

        stats.searches += 1
        rewrite = search_rewrite(table, forced_out, region, candidates, bound, accepts)
        if rewrite is not None:
            return (table.members - rewrite.remove) | rewrite.add

        if n <= MAX_ORACLE_SIZE:
            stats.oracle_calls += 1
            logger.warning(f"{self.name} n={n}: local search failed, using the oracle")
            return set(min_2dominating_set(graph, self.mode).witness.members)

        stats.over_bound += 1
        logger.error(f"{self.name} n={n} {frame.describe()}: result exceeds the bound")
        boundary = {edge_key(side[i], side[i + 1]) for i in range(len(side) - 1)}
        return (table.members - forced_out) | boundary

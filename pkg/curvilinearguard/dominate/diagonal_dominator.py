import logging

from curvilinearguard.dominate.diagonal_rules import (
    plan_diagonal,
    plan_diagonal_contraction,
)
from curvilinearguard.dominate.domination_bounds import diag_bound
from curvilinearguard.dominate.queue_engine import QueueEngine
from curvilinearguard.dominate.recursive_engine import EngineStats, RecursiveEngine
from curvilinearguard.dominate.small_sets import small_diag_set
from curvilinearguard.tracking_decorator import TrackingDecorator
from curvilinearguard.trigraph.subtree_shape_classifier import SHAPE_LAMBDA
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    TriangulationGraph,
)

logger = logging.getLogger(__name__)

# Below these sizes the algorithms stop reducing and solve directly
CONTRACTION_CUTOFF = 8
LINEAR_CUTOFF = 13

CONTRACTION_ENGINE = RecursiveEngine(
    name="diag-contract",
    mode=Mode.DIAGONAL,
    lam=3,
    cutoff=CONTRACTION_CUTOFF,
    planner=plan_diagonal_contraction,
    base=small_diag_set,
    bound=diag_bound,
)


def _solve_remainder(graph: TriangulationGraph, stats: EngineStats) -> DominatingSet:
    if graph.n <= 7:
        return small_diag_set(graph)
    return CONTRACTION_ENGINE.solve(graph, stats)


LINEAR_ENGINE = QueueEngine(
    name="diag-linear",
    mode=Mode.DIAGONAL,
    lam=SHAPE_LAMBDA[Mode.DIAGONAL],
    cutoff=LINEAR_CUTOFF,
    planner=plan_diagonal,
    base=_solve_remainder,
    bound=diag_bound,
)


@TrackingDecorator.track_time
def diag_2dominate_linear(graph: TriangulationGraph, stats: EngineStats = None) -> DominatingSet:
    """
    Diagonal 2-dominating set of at most floor((n+1)/3) members in linear time.
    Minimal sides of 4, 5 or 6 boundary edges are cut off in queue order until
    fewer than 13 vertices remain.
    :param graph: triangulation graph
    :param stats: optional counters filled during the run
    :return: dominating set
    """
    result = LINEAR_ENGINE.solve(graph, stats)
    logger.debug(f"diag-linear n={graph.n} size={len(result)} bound={diag_bound(graph.n)}")
    return result


@TrackingDecorator.track_time
def diag_2dominate_contraction(
    graph: TriangulationGraph, stats: EngineStats = None
) -> DominatingSet:
    """
    Diagonal 2-dominating set of at most floor((n+1)/3) members, cutting off
    sides of 3 or 4 boundary edges and contracting the remainder. Quadratic time.
    :param graph: triangulation graph
    :param stats: optional counters filled during the run
    :return: dominating set
    """
    result = CONTRACTION_ENGINE.solve(graph, stats)
    logger.debug(f"diag-contract n={graph.n} size={len(result)} bound={diag_bound(graph.n)}")
    return result

import logging

from curvilinearguard.dominate.domination_bounds import edge_bound, edge_linear_bound
from curvilinearguard.dominate.edge_rules import plan_edge_linear, plan_edge_quadratic
from curvilinearguard.dominate.queue_engine import QueueEngine
from curvilinearguard.dominate.recursive_engine import EngineStats, RecursiveEngine
from curvilinearguard.dominate.small_sets import small_edge_set
from curvilinearguard.tracking_decorator import TrackingDecorator
from curvilinearguard.trigraph.subtree_shape_classifier import SHAPE_LAMBDA
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    Mode,
    TriangulationGraph,
)

logger = logging.getLogger(__name__)

QUADRATIC_CUTOFF = 10
LINEAR_CUTOFF = 21

QUADRATIC_ENGINE = RecursiveEngine(
    name="edge-quadratic",
    mode=Mode.EDGE,
    lam=5,
    cutoff=QUADRATIC_CUTOFF,
    planner=plan_edge_quadratic,
    base=small_edge_set,
    bound=edge_bound,
)

LINEAR_ENGINE = QueueEngine(
    name="edge-linear",
    mode=Mode.EDGE,
    lam=SHAPE_LAMBDA[Mode.EDGE],
    cutoff=LINEAR_CUTOFF,
    planner=plan_edge_linear,
    base=QUADRATIC_ENGINE.solve,
    bound=edge_linear_bound,
)


@TrackingDecorator.track_time
def edge_2dominate_quadratic(
    graph: TriangulationGraph, stats: EngineStats = None
) -> DominatingSet:
    """
    Edge 2-dominating set of at most floor((2n+1)/5) boundary edges, two for
    the quadrilateral. Sides of five edges contract the remainder, sides of six
    to eight edges keep part of the side.
    :param graph: triangulation graph
    :param stats: optional counters filled during the run
    :return: dominating set
    """
    result = QUADRATIC_ENGINE.solve(graph, stats)
    logger.debug(f"edge-quadratic n={graph.n} size={len(result)} bound={edge_bound(graph.n)}")
    return result


@TrackingDecorator.track_time
def edge_2dominate_linear(graph: TriangulationGraph, stats: EngineStats = None) -> DominatingSet:
    """
    Edge 2-dominating set of at most floor(3n/7) boundary edges in linear time
    :param graph: triangulation graph
    :param stats: optional counters filled during the run
    :return: dominating set
    """
    result = LINEAR_ENGINE.solve(graph, stats)
    logger.debug(
        f"edge-linear n={graph.n} size={len(result)} bound={edge_linear_bound(graph.n)}"
    )
    return result

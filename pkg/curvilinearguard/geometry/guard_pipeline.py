import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from curvilinearguard.dominate.diagonal_dominator import diag_2dominate_linear
from curvilinearguard.dominate.domination_bounds import (
    diag_bound,
    edge_bound,
    edge_linear_bound,
    edge_lower_bound,
    mobile_lower_bound,
    monotone_bound,
)
from curvilinearguard.dominate.edge_dominator import (
    edge_2dominate_linear,
    edge_2dominate_quadratic,
)
from curvilinearguard.errors import NotMonotone
from curvilinearguard.geometry.constrained_triangulator import build_constrained_triangulation
from curvilinearguard.geometry.guard_mapper import (
    ArcGuard,
    GuardMode,
    GuardSet,
    edge_guards_from_edge_set,
    map_diagonal_set,
)
from curvilinearguard.monotone.monotone_decomposer import is_x_monotone
from curvilinearguard.monotone.monotone_guard_selector import monotone_edge_guards
from curvilinearguard.tracking_decorator import TrackingDecorator

logger = logging.getLogger(__name__)


class Strategy(Enum):
    MOBILE = "mobile"
    EDGE_QUADRATIC = "edge-quadratic"
    EDGE_LINEAR = "edge-linear"
    MONOTONE = "monotone"


def strategy_bound(strategy: Strategy, n):
    if n == 2:
        return 1
    return {
        Strategy.MOBILE: diag_bound,
        Strategy.EDGE_QUADRATIC: edge_bound,
        Strategy.EDGE_LINEAR: edge_linear_bound,
        Strategy.MONOTONE: monotone_bound,
    }[strategy](n)


def strategy_lower_bound(strategy: Strategy, n):
    if strategy is Strategy.MOBILE:
        return max(1, mobile_lower_bound(n))
    if strategy is Strategy.MONOTONE:
        return monotone_bound(n)
    return edge_lower_bound(n)


@dataclass
class GuardReport:
    strategy: str
    n: int
    guard_count: int
    bound: int
    lower_bound: int
    dominating_set_size: Optional[int] = None
    weak_promotions: int = 0
    guard_set: GuardSet = field(default=None, repr=False, compare=False)

    def summary(self):
        return {
            "strategy": self.strategy,
            "n": self.n,
            "dominating_set_size": self.dominating_set_size,
            "guard_count": self.guard_count,
            "bound": self.bound,
            "lower_bound": self.lower_bound,
            "weak_promotions": self.weak_promotions,
        }


@TrackingDecorator.track_time
def run_guard_pipeline(polygon, strategy: Strategy = Strategy.MOBILE) -> GuardReport:
    """
    Computes a guard set for a piecewise-convex polygon and reports the sizes
    of every stage
    :param polygon: validated polygon, locally convex polygons only with the monotone strategy
    :param strategy: guarding strategy
    :return: report carrying the guard set
    """
    n = polygon.n
    bound = strategy_bound(strategy, n)
    lower_bound = strategy_lower_bound(strategy, n)
    mode = GuardMode.MOBILE if strategy is Strategy.MOBILE else GuardMode.EDGE

    if strategy is Strategy.MONOTONE:
        if not is_x_monotone(polygon):
            raise NotMonotone("The polygon is not x-monotone")
        guard_set = monotone_edge_guards(polygon)
        report = GuardReport(strategy.value, n, len(guard_set), bound, lower_bound, guard_set=guard_set)
    elif n == 2:
        guard_set = GuardSet.of(mode, [ArcGuard(0)])
        report = GuardReport(strategy.value, n, 1, bound, lower_bound, guard_set=guard_set)
    else:
        ct = build_constrained_triangulation(polygon)
        if strategy is Strategy.MOBILE:
            dominating_set = diag_2dominate_linear(ct.graph)
            mapping = map_diagonal_set(ct, dominating_set)
            guard_set, promotions = mapping.guard_set, mapping.promotions
        else:
            solve = (
                edge_2dominate_quadratic
                if strategy is Strategy.EDGE_QUADRATIC
                else edge_2dominate_linear
            )
            dominating_set = solve(ct.graph)
            guard_set, promotions = edge_guards_from_edge_set(ct, dominating_set), 0
        report = GuardReport(
            strategy.value,
            n,
            len(guard_set),
            bound,
            lower_bound,
            dominating_set_size=len(dominating_set),
            weak_promotions=promotions,
            guard_set=guard_set,
        )

    if report.guard_count > bound:
        logger.error(f"{strategy.value} n={n}: {report.guard_count} guards exceed the bound {bound}")
    logger.info(f"{strategy.value} n={n}: {report.guard_count} guards, bound {bound}")
    return report


def guard_piecewise_convex(polygon, strategy: Strategy = Strategy.MOBILE) -> GuardSet:
    """
    Guard set for a piecewise-convex polygon: at most floor((n+1)/3) mobile
    guards, floor((2n+1)/5) or floor(3n/7) edge guards
    :param polygon: validated polygon
    :param strategy: guarding strategy
    :return: guard set
    """
    return run_guard_pipeline(polygon, strategy).guard_set

import pytest

from curvilinearguard.errors import NotMonotone
from curvilinearguard.geometry.curvilinear_polygon import build_polygon, bulging
from curvilinearguard.geometry.guard_mapper import ArcGuard, GuardMode
from curvilinearguard.geometry.guard_pipeline import (
    Strategy,
    guard_piecewise_convex,
    run_guard_pipeline,
    strategy_bound,
    strategy_lower_bound,
)
from curvilinearguard.geometry.visibility_checker import verify_guard_set
from curvilinearguard.lowerbounds.polygon_lower_bound_generator import (
    gen_monotone_lb,
    gen_spike_polygon,
)


def test_bounds_per_strategy():
    assert strategy_bound(Strategy.MOBILE, 8) == 3
    assert strategy_bound(Strategy.EDGE_QUADRATIC, 8) == 3
    assert strategy_bound(Strategy.MONOTONE, 8) == 3
    assert strategy_bound(Strategy.EDGE_LINEAR, 2) == 1
    assert strategy_lower_bound(Strategy.MOBILE, 4) == 1
    assert strategy_lower_bound(Strategy.EDGE_LINEAR, 10) == 4


def test_square_needs_one_mobile_guard(square):
    report = run_guard_pipeline(square, Strategy.MOBILE)
    assert report.guard_count == 1
    assert report.bound == 1
    assert report.guard_set.mode is GuardMode.MOBILE


def test_square_edge_guards(square):
    report = run_guard_pipeline(square, Strategy.EDGE_QUADRATIC)
    assert report.dominating_set_size == 2
    assert report.guard_count == 2
    assert all(isinstance(guard, ArcGuard) for guard in report.guard_set)


def test_summary_keys(square):
    summary = run_guard_pipeline(square, Strategy.EDGE_LINEAR).summary()
    assert list(summary) == [
        "strategy",
        "n",
        "dominating_set_size",
        "guard_count",
        "bound",
        "lower_bound",
        "weak_promotions",
    ]
    assert summary["strategy"] == "edge-linear"


def test_lens_is_guarded_by_one_arc():
    lens = build_polygon(
        [(0, 0), (4, 0)],
        [bulging((0, 0), (4, 0), 1), bulging((4, 0), (0, 0), 1)],
    )
    for strategy in (Strategy.MOBILE, Strategy.EDGE_QUADRATIC):
        guards = guard_piecewise_convex(lens, strategy)
        assert list(guards) == [ArcGuard(0)]


def test_monotone_strategy_on_square(square):
    report = run_guard_pipeline(square, Strategy.MONOTONE)
    assert report.guard_count <= report.bound
    assert report.dominating_set_size is None


def test_monotone_strategy_rejects_spikes():
    with pytest.raises(NotMonotone):
        run_guard_pipeline(gen_spike_polygon(5), Strategy.MONOTONE)


@pytest.mark.parametrize("strategy", list(Strategy))
def test_guards_within_bound(notched_polygon, strategy):
    report = run_guard_pipeline(notched_polygon, strategy)
    assert report.guard_count <= report.bound


def test_weak_promotions_stay_within_bound(double_notched_polygon):
    report = run_guard_pipeline(double_notched_polygon, Strategy.MOBILE)
    assert report.guard_count <= report.bound
    assert report.weak_promotions >= 0


@pytest.mark.parametrize("strategy", [Strategy.MOBILE, Strategy.EDGE_QUADRATIC])
def test_pipeline_guards_cover(bulging_square, strategy):
    guards = guard_piecewise_convex(bulging_square, strategy)
    assert verify_guard_set(bulging_square, guards, density=15).covered


@pytest.mark.parametrize(
    "strategy", [Strategy.MOBILE, Strategy.EDGE_QUADRATIC, Strategy.EDGE_LINEAR]
)
def test_rooms_with_single_vertex_crescents(strategy):
    polygon = gen_monotone_lb(1, 4)
    report = run_guard_pipeline(polygon, strategy)
    assert report.guard_count <= strategy_bound(strategy, polygon.n)
    arcs = [guard.index for guard in report.guard_set if isinstance(guard, ArcGuard)]
    assert all(0 <= index < polygon.n for index in arcs)

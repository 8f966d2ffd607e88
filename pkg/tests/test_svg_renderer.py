from curvilinearguard.config.guarding_config_loader import Rendering
from curvilinearguard.document.svg_renderer import (
    GUARD_COLOR,
    graph_layout,
    render_graph_svg,
    render_polygon_svg,
)
from curvilinearguard.geometry.guard_mapper import ArcGuard, DiagonalGuard, GuardMode, GuardSet
from curvilinearguard.trigraph.triangulation_generator import fan_triangulation
from curvilinearguard.trigraph.triangulation_graph import DominatingSet, Mode


def test_layout_starts_at_the_bottom():
    layout = graph_layout(4)
    assert layout[0] == (0.0, -1.0)
    assert len(layout) == 4


def test_graph_svg():
    graph = fan_triangulation(6)
    dominating_set = DominatingSet.of(Mode.DIAGONAL, [(0, 3)])
    content = render_graph_svg(graph, dominating_set)
    assert content.startswith('<?xml version="1.0"')
    assert content.count("<path") == len(graph.edges)
    assert content.count("<circle") == 6
    assert content.count(f'stroke="{GUARD_COLOR}"') == 1
    assert 'stroke-width="4"' in content
    assert content.count('stroke-dasharray="6 4"') == len(graph.diagonals)


def test_graph_svg_is_deterministic():
    graph = fan_triangulation(7)
    assert render_graph_svg(graph) == render_graph_svg(graph)


def test_polygon_svg(tmp_path, bulging_square):
    guards = GuardSet.of(GuardMode.MOBILE, [ArcGuard(0), DiagonalGuard(1, 3)])
    out_path = tmp_path / "svg" / "square.svg"
    content = render_polygon_svg(
        bulging_square, guards, diagonals=[(1, 3)], out_path=str(out_path)
    )
    assert out_path.read_text(encoding="utf-8") == content
    # One circular arc in the boundary and one in the arc guard
    assert content.count(" A ") == 2
    assert content.count(f'stroke="{GUARD_COLOR}"') == 2
    assert 'width="600"' in content


def test_rendering_settings(square):
    content = render_polygon_svg(square, rendering=Rendering(width=300, guard_stroke_width=6))
    assert 'width="300"' in content
    assert content.count("<path") == 1

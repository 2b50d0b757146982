import xml.etree.ElementTree as ET

import pytest

from confplan.config_space import Configuration
from confplan.errors import ArgumentError
from confplan.fixtures import figure_configuration, swap_pair
from confplan.piecewise import PiecewisePath
from confplan.planner import StackStrategy, approach_path, p_line, plan
from confplan.svg_export import export_svg

SVG = "{http://www.w3.org/2000/svg}"


def _parse(document):
    return ET.fromstring(document)


def test_constant_path_draws_dots_only():
    config = Configuration.from_points([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])
    root = _parse(export_svg(PiecewisePath.constant(config)))
    assert root.findall(f".//{SVG}polyline") == []
    assert len(root.findall(f".//{SVG}circle")) == 3


def test_figure_approach_ends_on_one_line():
    x = figure_configuration()
    line = p_line(x, x) + 1.0
    path = approach_path(x, line, StackStrategy.DISTANCE)
    root = _parse(export_svg(path, lines=(line,)))
    polylines = root.findall(f".//{SVG}polyline")
    assert len(polylines) == 8
    ends = {p.get("points").split()[-1].split(",")[0] for p in polylines}
    assert len(ends) == 1
    planner_lines = root.findall(f"{SVG}line")
    assert len(planner_lines) == 1
    assert planner_lines[0].get("x1") in ends


def test_plan_output_is_well_formed_and_deterministic():
    x, y = swap_pair()
    result = plan(x, y)
    first = export_svg(result.path, 8, lines=result.line_abscissas)
    second = export_svg(result.path, 8, lines=result.line_abscissas)
    assert first == second
    root = _parse(first)
    assert root.tag == f"{SVG}svg"
    assert [g.get("id") for g in root.findall(f"{SVG}g")] == ["label-1", "label-2"]
    assert len(root.findall(f"{SVG}line")) == 2


def test_projection_is_required_above_the_plane():
    x = Configuration.from_points([(0.0, 0.0, 0.0), (1.0, 0.0, 1.0)])
    path = PiecewisePath.constant(x)
    with pytest.raises(ArgumentError):
        export_svg(path)
    with pytest.raises(ArgumentError):
        export_svg(path, projection=(0, 3))
    with pytest.raises(ArgumentError):
        export_svg(path, projection=(1, 1))
    assert _parse(export_svg(path, projection=(0, 2))) is not None


def test_samples_per_segment_must_be_positive():
    x, _ = swap_pair()
    with pytest.raises(ArgumentError):
        export_svg(PiecewisePath.constant(x), samples_per_segment=0)

import json

import numpy as np
import pytest

from confplan.config_space import Configuration
from confplan.errors import ArgumentError, PathStructureError
from confplan.fixtures import figure_configuration
from confplan.models import (
    configuration_payload,
    dump_json,
    parse_configuration,
    parse_path,
    parse_retract_input,
    path_payload,
)
from confplan.planner import plan
from confplan.retractions import UnitTuple


def test_configuration_payload_shape():
    x = Configuration.from_points([(0.5, 1.0), (2.0, -3.25)])
    payload = configuration_payload(x)
    assert payload == {"dim": 2, "points": [[0.5, 1.0], [2.0, -3.25]]}


def test_parse_configuration_rejects_schema_violations():
    with pytest.raises(ArgumentError):
        parse_configuration('{"dim": 2}')
    with pytest.raises(ArgumentError):
        parse_configuration('{"dim": 2, "points": [[0, 0]], "extra": 1}')
    with pytest.raises(ArgumentError):
        parse_configuration("not json")


def test_parse_configuration_enforces_distinct_points():
    with pytest.raises(ArgumentError):
        parse_configuration('{"dim": 2, "points": [[0, 0], [0, 0]]}')


def test_planned_path_survives_json_bit_exactly(random_configuration):
    x = random_configuration(3, 5)
    y = random_configuration(3, 5)
    path = plan(x, y).path
    again = parse_path(dump_json(path_payload(path)))
    assert again.times == path.times
    for ours, theirs in zip(path.configs, again.configs):
        assert np.array_equal(ours.points, theirs.points)


def test_parse_path_reports_structure_errors():
    config = configuration_payload(figure_configuration())
    unordered = {
        "breakpoints": [{"t": 0.0, "config": config}, {"t": 0.5, "config": config}]
    }
    with pytest.raises(PathStructureError):
        parse_path(json.dumps(unordered))

    duplicate = {"dim": 2, "points": [[0, 0], [0, 0]]}
    broken = {
        "breakpoints": [
            {"t": 0.0, "config": config},
            {"t": 1.0, "config": duplicate},
        ]
    }
    with pytest.raises(PathStructureError):
        parse_path(json.dumps(broken))


def test_parse_retract_input_tells_inputs_apart():
    unit = parse_retract_input('{"vectors": [[1.0, 0.0], [0.0, 1.0]]}')
    assert isinstance(unit, UnitTuple)
    config = parse_retract_input('{"dim": 2, "points": [[1.0, 0.0], [0.0, 1.0]]}')
    assert isinstance(config, Configuration)
    with pytest.raises(ArgumentError):
        parse_retract_input('{"vectors": [[2.0, 0.0]]}')
    with pytest.raises(ArgumentError):
        parse_retract_input('{"something": 1}')

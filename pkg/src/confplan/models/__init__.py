"""
Wire schemas for the JSON files read and written by confplan.

Configuration: {"dim": n, "points": [[c1, ..., cn], ...]}
Path:          {"breakpoints": [{"t": 0.0, "config": {...}}, ...]}
Unit tuple:    {"vectors": [[...], ...]}

Numbers are emitted through the standard float repr, the shortest string
that reads back to the same double, so written paths re-read bit-exactly.
"""

from __future__ import annotations

import json
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from ..config_space import Configuration
from ..errors import ArgumentError, PathStructureError
from ..piecewise import Breakpoint, PiecewisePath
from ..retractions import UnitTuple


class ConfigurationModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    dim: int = Field(ge=2)
    points: list[list[float]] = Field(min_length=1)

    def to_domain(self) -> Configuration:
        return Configuration(self.dim, self.points)

    @classmethod
    def from_domain(cls, config: Configuration) -> "ConfigurationModel":
        return cls(dim=config.dim, points=config.as_lists())


class BreakpointModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    t: float
    config: ConfigurationModel


class PathModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    breakpoints: list[BreakpointModel] = Field(min_length=2)

    def to_domain(self) -> PiecewisePath:
        try:
            return PiecewisePath(
                tuple(Breakpoint(b.t, b.config.to_domain()) for b in self.breakpoints)
            )
        except ArgumentError as exc:
            if isinstance(exc, PathStructureError):
                raise
            raise PathStructureError(f"Malformed path: {exc}") from exc

    @classmethod
    def from_domain(cls, path: PiecewisePath) -> "PathModel":
        return cls(
            breakpoints=[
                BreakpointModel(
                    t=b.time, config=ConfigurationModel.from_domain(b.config)
                )
                for b in path.breakpoints
            ]
        )


class UnitTupleModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    vectors: list[list[float]] = Field(min_length=1)

    def to_domain(self) -> UnitTuple:
        return UnitTuple(self.vectors)


_RETRACT_INPUT = TypeAdapter(ConfigurationModel | UnitTupleModel)


def _validate(model: type[BaseModel], text: str | bytes, what: str) -> Any:
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        raise ArgumentError(
            f"Invalid {what} JSON: {exc.error_count()} error(s)\n{exc}"
        ) from exc


def parse_configuration(text: str | bytes) -> Configuration:
    return _validate(ConfigurationModel, text, "configuration").to_domain()


def parse_path(text: str | bytes) -> PiecewisePath:
    return _validate(PathModel, text, "path").to_domain()


def parse_retract_input(text: str | bytes) -> Configuration | UnitTuple:
    """Either a configuration or a unit tuple, told apart by their keys."""
    try:
        model = _RETRACT_INPUT.validate_json(text)
    except ValidationError as exc:
        raise ArgumentError(
            f"Expected a configuration or a unit tuple:\n{exc}"
        ) from exc
    return model.to_domain()


def configuration_payload(config: Configuration) -> dict[str, Any]:
    return ConfigurationModel.from_domain(config).model_dump()


def path_payload(path: PiecewisePath) -> dict[str, Any]:
    return PathModel.from_domain(path).model_dump()


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2)


__all__ = [
    "BreakpointModel",
    "ConfigurationModel",
    "PathModel",
    "UnitTupleModel",
    "configuration_payload",
    "dump_json",
    "parse_configuration",
    "parse_path",
    "parse_retract_input",
    "path_payload",
]

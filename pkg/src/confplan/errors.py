"""Exception hierarchy shared by every confplan module."""

from __future__ import annotations


class ConfplanError(Exception):
    """Base class for all confplan failures."""


class ArgumentError(ConfplanError, ValueError):
    """An operation was called with arguments violating its preconditions."""


class ConfigurationError(ArgumentError):
    """A point tuple is not a valid element of F(R^n, k)."""


class StrategyError(ArgumentError):
    """A line-stacking strategy produced coincident target heights."""


class PathStructureError(ArgumentError):
    """A piecewise-linear path is malformed (times, shapes or breakpoints)."""


class UncoveredCaseError(ConfplanError):
    """A complexity query falls outside the regimes with a known closed form."""


class InvariantError(ConfplanError, RuntimeError):
    """An internal invariant that valid inputs guarantee was found broken."""

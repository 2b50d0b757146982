"""Built-in configurations shipped with the `demo` command."""

from __future__ import annotations

from .config_space import Configuration


def figure_configuration() -> Configuration:
    """Eight ordered points on four levels, partition (3, 2, 1, 2)."""
    return Configuration.from_points(
        [
            (0.4, 0.0),
            (1.2, 0.0),
            (2.0, 0.0),
            (0.8, 1.0),
            (1.8, 1.0),
            (1.5, 1.5),
            (1.5, 2.5),
            (2.5, 2.5),
        ]
    )


def swap_pair() -> tuple[Configuration, Configuration]:
    """Two points exchanging places on one level."""
    return (
        Configuration.from_points([(0.0, 0.0), (1.0, 0.0)]),
        Configuration.from_points([(1.0, 0.0), (0.0, 0.0)]),
    )


def swap_stacks(first_line: float = 0.0) -> tuple[Configuration, Configuration]:
    """Stacks on X = c and X = c + 1 that order the two labels oppositely."""
    second_line = first_line + 1.0
    return (
        Configuration.from_points([(first_line, -1.0), (first_line, 0.0)]),
        Configuration.from_points([(second_line, 0.0), (second_line, -1.0)]),
    )

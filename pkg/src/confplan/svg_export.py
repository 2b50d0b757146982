"""Render piecewise-linear motions as SVG traces (one polyline per labeled point)."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from collections.abc import Sequence

import numpy as np

from .errors import ArgumentError
from .piecewise import PiecewisePath

CANVAS = 640.0
MARGIN = 24.0
PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def _trace(
    path: PiecewisePath, samples_per_segment: int, axes: tuple[int, int]
) -> np.ndarray:
    """Sampled positions projected to the plane, shape (samples, k, 2)."""
    frames = []
    times = path.times
    for index, (t0, t1) in enumerate(zip(times, times[1:])):
        local = np.linspace(t0, t1, samples_per_segment + 1)
        if index > 0:
            local = local[1:]
        frames.extend(path.positions(float(min(t, 1.0))) for t in local)
    return np.stack(frames)[:, :, list(axes)]


def export_svg(
    path: PiecewisePath,
    samples_per_segment: int = 16,
    projection: Sequence[int] | None = None,
    lines: Sequence[float] = (),
) -> str:
    """
    SVG document with one polyline per label, breakpoint markers and the
    vertical planner lines X = c for every c in `lines`.

    Raises:
        ArgumentError: If the projection does not name two distinct axes of R^n,
            or none is given for n > 2.
    """
    if samples_per_segment < 1:
        raise ArgumentError("Need at least one sample per segment")
    if projection is None:
        if path.dim != 2:
            raise ArgumentError(f"Paths in R^{path.dim} need a projection pair")
        projection = (0, 1)
    axes = tuple(int(a) for a in projection)
    if len(axes) != 2 or axes[0] == axes[1] or not all(0 <= a < path.dim for a in axes):
        raise ArgumentError(f"Bad projection {tuple(projection)} for R^{path.dim}")

    trace = _trace(path, samples_per_segment, axes)  # type: ignore[arg-type]
    markers = np.stack([c.points for c in path.configs])[:, :, list(axes)]

    low = trace.reshape(-1, 2).min(axis=0)
    high = trace.reshape(-1, 2).max(axis=0)
    if axes[0] == 0 and lines:
        low[0] = min(low[0], min(lines))
        high[0] = max(high[0], max(lines))
    span = float(max((high - low).max(), 1e-9))
    scale = (CANVAS - 2 * MARGIN) / span

    def to_canvas(point: np.ndarray) -> tuple[str, str]:
        u = MARGIN + (point[0] - low[0]) * scale
        v = CANVAS - MARGIN - (point[1] - low[1]) * scale
        return _fmt(u), _fmt(v)

    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": _fmt(CANVAS),
            "height": _fmt(CANVAS),
            "viewBox": f"0 0 {_fmt(CANVAS)} {_fmt(CANVAS)}",
        },
    )
    if axes[0] == 0:
        for abscissa in lines:
            u, _ = to_canvas(np.array([abscissa, low[1]]))
            ET.SubElement(
                root,
                "line",
                {
                    "class": "planner-line",
                    "x1": u,
                    "y1": _fmt(MARGIN / 2),
                    "x2": u,
                    "y2": _fmt(CANVAS - MARGIN / 2),
                    "stroke": "#999999",
                    "stroke-dasharray": "4 4",
                },
            )

    for label in range(path.k):
        color = PALETTE[label % len(PALETTE)]
        group = ET.SubElement(root, "g", {"id": f"label-{label + 1}", "fill": color})
        track = trace[:, label, :]
        if np.ptp(track, axis=0).any():
            ET.SubElement(
                group,
                "polyline",
                {
                    "points": " ".join(",".join(to_canvas(p)) for p in track),
                    "fill": "none",
                    "stroke": color,
                    "stroke-width": "1.5",
                },
            )
        for point in np.unique(markers[:, label, :], axis=0):
            u, v = to_canvas(point)
            ET.SubElement(group, "circle", {"cx": u, "cy": v, "r": "3"})
    return ET.tostring(root, encoding="unicode")

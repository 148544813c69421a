"""Deterministic SVG rendering of a configuration.

Output is a pure function of (configuration, style): fixed element order (the
five circles, the pentagon circle, the Hagge circles, the perspectrix lines,
then points with labels), all coordinates converted to double precision and
written with exactly six decimal places.  Geometry is emitted in world
coordinates inside a single y-flipping transform so exact values remain
recognizable in the file; labels live in screen space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .configuration import (
    CENTER_LABELS,
    CIRCLE_LABELS,
    POINT_LABELS,
    PERSPECTIVE_TABLE,
    WoodDesarguesConfiguration,
    DerivedFigures,
    derive_figures,
)
from .kernel import Line, Point, line_through

LAYERS = ("points", "circles", "perspectrices", "haggeCentres", "pentagon")

_CIRCLE_STROKE = "#1f77b4"
_PENTAGON_STROKE = "#d62728"
_HAGGE_STROKE = "#2ca02c"
_LINE_STROKE = "#7f7f7f"


@dataclass(frozen=True)
class RenderStyle:
    layers: tuple[str, ...] = LAYERS
    size: int = 800
    margin: float = 0.05

    def __post_init__(self) -> None:
        unknown = [l for l in self.layers if l not in LAYERS]
        if unknown:
            raise ValueError(f"unknown layers: {unknown}")
        if self.size <= 0 or not (0.0 <= self.margin < 0.5):
            raise ValueError("size must be positive and margin in [0, 0.5)")


def _fmt(v: float) -> str:
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return f"{v:.6f}"


def _fpoint(p: Point) -> tuple[float, float]:
    return (float(p.x), float(p.y))


def _clip_line(line: Line, box: tuple[float, float, float, float]):
    """Segment of an infinite line inside a rectangle, or None."""
    a, b, c = float(line.a), float(line.b), float(line.c)
    x0, y0, x1, y1 = box
    pts = []
    if b != 0.0:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((x, y))
    if a != 0.0:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, y))
    dedup: list[tuple[float, float]] = []
    for p in pts:
        if all(math.hypot(p[0] - q[0], p[1] - q[1]) > 1e-9 for q in dedup):
            dedup.append(p)
    if len(dedup) < 2:
        return None
    dedup.sort()
    return dedup[0], dedup[-1]


def _perspectrix_lines(config: WoodDesarguesConfiguration) -> list[tuple[str, Line]]:
    out = []
    for rec in PERSPECTIVE_TABLE:
        w = [config.points[x] for x in rec.perspectrix]
        if w[0] != w[1]:
            out.append(("".join(rec.perspectrix), line_through(w[0], w[1])))
        elif w[0] != w[2]:
            out.append(("".join(rec.perspectrix), line_through(w[0], w[2])))
    return out


def render_svg(config: WoodDesarguesConfiguration,
               style: RenderStyle = RenderStyle(),
               derived: DerivedFigures | None = None) -> str:
    if derived is None:
        derived = derive_figures(config)
    layers = set(style.layers)

    circles: list[tuple[str, float, float, float, str]] = []  # label, cx, cy, r, stroke
    if "circles" in layers:
        for lbl in CIRCLE_LABELS:
            c = config.circles[lbl]
            cx, cy = _fpoint(c.center)
            circles.append((lbl, cx, cy, math.sqrt(float(c.radius_squared)), _CIRCLE_STROKE))
    if "pentagon" in layers and derived.pentagon.circle is not None:
        c = derived.pentagon.circle
        cx, cy = _fpoint(c.center)
        circles.append(("pentagon", cx, cy, math.sqrt(float(c.radius_squared)), _PENTAGON_STROKE))
    if "haggeCentres" in layers:
        for rec in PERSPECTIVE_TABLE:
            fig = derived.hagge[rec.vertex]
            if fig is None:
                continue
            cx, cy = _fpoint(fig.circle.center)
            circles.append((f"hagge-{rec.vertex}", cx, cy,
                            math.sqrt(float(fig.circle.radius_squared)), _HAGGE_STROKE))

    markers: list[tuple[str, float, float]] = []
    if "points" in layers:
        for lbl in POINT_LABELS:
            x, y = _fpoint(config.points[lbl])
            markers.append((lbl, x, y))
        x, y = _fpoint(config.j)
        markers.append(("J", x, y))
        for lbl in CENTER_LABELS:
            x, y = _fpoint(config.centers[lbl])
            markers.append((lbl, x, y))
    if "haggeCentres" in layers:
        for rec in PERSPECTIVE_TABLE:
            fig = derived.hagge[rec.vertex]
            if fig is None:
                continue
            x, y = _fpoint(fig.centre)
            markers.append((f"h({rec.vertex})", x, y))

    perspectrices = _perspectrix_lines(config) if "perspectrices" in layers else []

    # bounding box over everything that will be drawn
    xs: list[float] = []
    ys: list[float] = []
    for _, cx, cy, r, _stroke in circles:
        xs += [cx - r, cx + r]
        ys += [cy - r, cy + r]
    for _, x, y in markers:
        xs.append(x)
        ys.append(y)
    if perspectrices:
        for rec in PERSPECTIVE_TABLE:
            for plbl in rec.perspectrix:
                x, y = _fpoint(config.points[plbl])
                xs.append(x)
                ys.append(y)
    if not xs:
        xs, ys = [0.0, 1.0], [0.0, 1.0]

    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    w = max(x1 - x0, 1e-9)
    h = max(y1 - y0, 1e-9)
    pad = style.margin * max(w, h)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    w, h = x1 - x0, y1 - y0
    k = style.size / max(w, h)
    width, height = k * w, k * h
    tx, ty = -k * x0, k * y1

    def to_screen(x: float, y: float) -> tuple[float, float]:
        return (k * x + tx, ty - k * y)

    sw = 1.5 / k          # stroke width in world units
    ms = 4.0 / k          # marker size in world units

    out: list[str] = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" '
               f'width="{_fmt(width)}" height="{_fmt(height)}" '
               f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">')
    out.append(f'<g transform="matrix({_fmt(k)} 0 0 {_fmt(-k)} {_fmt(tx)} {_fmt(ty)})" '
               f'fill="none">')
    for lbl, cx, cy, r, stroke in circles:
        out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
                   f'stroke="{stroke}" stroke-width="{_fmt(sw)}"/>')
    for lbl, line in perspectrices:
        seg = _clip_line(line, (x0, y0, x1, y1))
        if seg is None:
            continue
        (ax, ay), (bx, by) = seg
        out.append(f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" '
                   f'stroke="{_LINE_STROKE}" stroke-width="{_fmt(sw)}"/>')
    for lbl, x, y in markers:
        out.append(f'<rect x="{_fmt(x - ms / 2)}" y="{_fmt(y - ms / 2)}" '
                   f'width="{_fmt(ms)}" height="{_fmt(ms)}" fill="#000000"/>')
    out.append('</g>')
    if markers:
        out.append('<g font-family="monospace" font-size="12" fill="#000000">')
        for lbl, x, y in markers:
            sx, sy = to_screen(x, y)
            out.append(f'<text x="{_fmt(sx + 5.0)}" y="{_fmt(sy - 5.0)}">{lbl}</text>')
        out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"

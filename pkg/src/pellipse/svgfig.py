"""Minimal SVG 1.1 rendering of billiard trajectories.

Produces a deterministic 600 x 600 standalone figure: the boundary
ellipse, the four common light-like tangents ``x +- y = +- sqrt(a + b)``
(gray), the caustic conic (dashed), the trajectory polyline and its
vertices.  All coordinates are emitted with three decimals; the world
extent adapts to the trajectory so every vertex stays inside the canvas.
"""

from __future__ import annotations

import math

from .dynamics import Trajectory
from .geometry import ALL_CONICS, BoundaryEllipse, ConicClass, classify_conic

__all__ = ["render_trajectory_svg"]

_F = "%.3f"


def _fmt(x: float) -> str:
    s = _F % x
    return "0.000" if s == "-0.000" else s


class _Frame:
    """World-to-pixel transform for a centered square canvas."""

    def __init__(self, half_extent: float, size: int):
        self.size = size
        self.scale = (size / 2) / half_extent
        self.center = size / 2

    def to_px(self, x: float, y: float) -> tuple[float, float]:
        return self.center + self.scale * x, self.center - self.scale * y


def _polyline(points: list[tuple[float, float]], style: str) -> str:
    pts = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in points)
    return f'<polyline points="{pts}" {style}/>'


def _caustic_elements(E: BoundaryEllipse, gamma, frame: _Frame, half: float) -> list[str]:
    style = 'fill="none" stroke="#1f6fc4" stroke-width="1.2" stroke-dasharray="6 4"'
    if gamma is ALL_CONICS or gamma is None:
        return []
    g = float(gamma)
    if math.isinf(g):
        return []
    a, b = float(E.a), float(E.b)
    conic = classify_conic(g, E)
    cx, cy = frame.to_px(0.0, 0.0)
    if conic is ConicClass.EllipseOfFamily:
        rx = math.sqrt(a - g) * frame.scale
        ry = math.sqrt(b + g) * frame.scale
        return [
            f'<ellipse cx="{_fmt(cx)}" cy="{_fmt(cy)}" rx="{_fmt(rx)}" ry="{_fmt(ry)}" {style}/>'
        ]
    out = []
    if conic is ConicClass.HyperbolaXMajor:
        # x**2/(a-g) - y**2/|b+g| = 1, two branches opening left/right
        ax, ay = math.sqrt(a - g), math.sqrt(-(b + g))
        reach = half / min(ax, ay) + 1.0
        umax = math.asinh(reach)
        for sx in (1.0, -1.0):
            pts = []
            for i in range(81):
                u = -umax + 2 * umax * i / 80
                pts.append(frame.to_px(sx * ax * math.cosh(u), ay * math.sinh(u)))
            out.append(_polyline(pts, style))
        return out
    if conic is ConicClass.HyperbolaYMajor:
        ax, ay = math.sqrt(g - a), math.sqrt(b + g)
        reach = half / min(ax, ay) + 1.0
        umax = math.asinh(reach)
        for sy in (1.0, -1.0):
            pts = []
            for i in range(81):
                u = -umax + 2 * umax * i / 80
                pts.append(frame.to_px(ax * math.sinh(u), sy * ay * math.cosh(u)))
            out.append(_polyline(pts, style))
        return out
    return []


def render_trajectory_svg(T: Trajectory, size: int = 600) -> str:
    """Render the trajectory with its ellipse and caustic as an SVG document."""
    E = T.ellipse
    a, b = float(E.a), float(E.b)
    extent = max(math.sqrt(a), math.sqrt(b), math.sqrt(a + b) / math.sqrt(2))
    for P in T.vertices:
        extent = max(extent, abs(float(P.x)), abs(float(P.y)))
    half = extent * 1.12
    frame = _Frame(half, size)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    # common light-like tangents x +- y = +- sqrt(a+b)
    c = math.sqrt(a + b)
    tangent_style = 'stroke="#9a9a9a" stroke-width="0.8"'
    for sgn_c in (c, -c):
        for slope in (1.0, -1.0):
            # y = slope * x - slope * sgn_c  <=>  x - slope*y = sgn_c ... sample ends
            x0, x1 = -half, half
            y0 = slope * (x0 - sgn_c)
            y1 = slope * (x1 - sgn_c)
            (px0, py0), (px1, py1) = frame.to_px(x0, y0), frame.to_px(x1, y1)
            parts.append(
                f'<line x1="{_fmt(px0)}" y1="{_fmt(py0)}" x2="{_fmt(px1)}" '
                f'y2="{_fmt(py1)}" {tangent_style}/>'
            )
    cx, cy = frame.to_px(0.0, 0.0)
    rx, ry = math.sqrt(a) * frame.scale, math.sqrt(b) * frame.scale
    parts.append(
        f'<ellipse cx="{_fmt(cx)}" cy="{_fmt(cy)}" rx="{_fmt(rx)}" ry="{_fmt(ry)}" '
        'fill="none" stroke="black" stroke-width="1.5"/>'
    )
    parts.extend(_caustic_elements(E, T.caustic_gamma, frame, half))
    traj_pts = [frame.to_px(float(P.x), float(P.y)) for P in T.vertices]
    parts.append(
        _polyline(traj_pts, 'fill="none" stroke="#c42f2f" stroke-width="1.3"')
    )
    for px, py in traj_pts:
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="2.5" fill="#c42f2f"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""Deterministic static SVG scatterplots.

Output is plain SVG 1.1 text with fixed formatting, so identical input
always produces identical bytes.
"""
from __future__ import annotations

import numpy as np

_SIZE = 420
_MARGIN = 40
_POINT_R = 2.0


def _header(width: int, height: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]


def _square_panel(pts: np.ndarray, lo: float, hi: float,
                  ticks: tuple[float, ...], x0: int) -> list[str]:
    s = _SIZE
    m = _MARGIN

    def sx(v: float) -> float:
        return x0 + m + (v - lo) / (hi - lo) * s

    def sy(v: float) -> float:
        return m + (hi - v) / (hi - lo) * s

    out = [f'<rect x="{x0 + m}" y="{m}" width="{s}" height="{s}" '
           'fill="none" stroke="black" stroke-width="1"/>']
    for t in ticks:
        x = sx(t)
        y = sy(t)
        out.append(f'<line x1="{x:.2f}" y1="{m + s}" x2="{x:.2f}" '
                   f'y2="{m + s + 6}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{x:.2f}" y="{m + s + 20}" font-size="12" '
                   f'text-anchor="middle" font-family="sans-serif">{t:g}</text>')
        out.append(f'<line x1="{x0 + m - 6}" y1="{y:.2f}" x2="{x0 + m}" '
                   f'y2="{y:.2f}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{x0 + m - 10}" y="{y + 4:.2f}" font-size="12" '
                   f'text-anchor="end" font-family="sans-serif">{t:g}</text>')
    for p in pts:
        out.append(f'<circle cx="{sx(p[0]):.2f}" cy="{sy(p[1]):.2f}" '
                   f'r="{_POINT_R}" fill="black"/>')
    return out


def _hemisphere_panel(pts: np.ndarray, x0: int, label: str) -> list[str]:
    s = _SIZE
    m = _MARGIN
    cx = x0 + m + s / 2.0
    cy = m + s / 2.0
    r = s / 2.0
    out = [f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r:.2f}" fill="none" '
           'stroke="black" stroke-width="1"/>',
           f'<text x="{cx:.2f}" y="{m + s + 24}" font-size="13" '
           f'text-anchor="middle" font-family="sans-serif">{label}</text>']
    for p in pts:
        px = cx + p[0] * r
        py = cy - p[1] * r
        out.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="{_POINT_R}" '
                   'fill="black"/>')
    return out


def scatter_svg(points: np.ndarray, path) -> None:
    """Write a scatterplot of 2-d points (square frame, ticks at 0, 0.5, 1
    for unit-square data) or 3-d points (two orthographic hemispheres)."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] not in (2, 3) or pts.shape[0] < 1:
        raise ValueError("expected a nonempty (n, 2) or (n, 3) point array")
    if pts.shape[1] == 2:
        if pts.min() >= 0.0 and pts.max() <= 1.0:
            lo, hi, ticks = 0.0, 1.0, (0.0, 0.5, 1.0)
        else:
            lo, hi, ticks = -1.1, 1.1, (-1.0, 0.0, 1.0)
        width = _SIZE + 2 * _MARGIN
        lines = _header(width, _SIZE + 2 * _MARGIN)
        lines += _square_panel(pts, lo, hi, ticks, 0)
    else:
        width = 2 * (_SIZE + 2 * _MARGIN)
        lines = _header(width, _SIZE + 2 * _MARGIN)
        north = pts[pts[:, 2] >= 0.0]
        south = pts[pts[:, 2] < 0.0]
        lines += _hemisphere_panel(north, 0, "z &#8805; 0")
        lines += _hemisphere_panel(south, _SIZE + 2 * _MARGIN, "z &lt; 0")
    lines.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")

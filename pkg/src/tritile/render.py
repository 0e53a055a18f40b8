"""SVG and ASCII pictures of tile sets and trajectories.

Rendering is the one place floats appear: the equilateral drawing basis
sends the three axes to plane directions (1,0), (-1/2, sqrt3/2) and
(-1/2, -sqrt3/2), which collapses the viewing diagonal to a point, so a
tile and all its shifts draw the same triangle.  ASCII output maps every
flat tile to one character: ``/`` and ``\\`` mark the two orientations
and trajectory tiles show their code letter instead.
"""

from __future__ import annotations

import math

from .lattice import QPoint
from .tiles import SlantTile, flatten, vertices

_SQ3 = math.sqrt(3.0) / 2.0


def _xy(q: QPoint) -> tuple[float, float]:
    # y is negated: SVG grows downward.
    return (q[0] - 0.5 * q[1] - 0.5 * q[2], -_SQ3 * (q[1] - q[2]))


def svg_picture(tiles: list[tuple[SlantTile, str | None]], scale: float = 40.0) -> str:
    """An SVG drawing of labelled tiles; empty input gives an empty canvas."""
    polys = []
    for s, label in tiles:
        pts = [_xy(v) for v in vertices(s)]
        polys.append((pts, label))
    if polys:
        xs = [x for pts, _ in polys for x, _ in pts]
        ys = [y for pts, _ in polys for _, y in pts]
        x0, x1 = min(xs) - 0.5, max(xs) + 0.5
        y0, y1 = min(ys) - 0.5, max(ys) + 0.5
    else:
        x0, x1, y0, y1 = -1.0, 1.0, -1.0, 1.0
    width = (x1 - x0) * scale
    height = (y1 - y0) * scale

    def sx(x: float) -> str:
        return f"{(x - x0) * scale:.2f}"

    def sy(y: float) -> str:
        return f"{(y - y0) * scale:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.2f} {height:.2f}">',
    ]
    for pts, label in polys:
        path = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
        fill = "#e8e8e8" if label is None else "#ffffff"
        out.append(
            f'<polygon points="{path}" fill="{fill}" stroke="#333333" stroke-width="1"/>'
        )
    for pts, label in polys:
        if label is None:
            continue
        cx = sum(x for x, _ in pts) / 3.0
        cy = sum(y for _, y in pts) / 3.0
        out.append(
            f'<text x="{sx(cx)}" y="{sy(cy)}" font-size="{scale * 0.35:.1f}" '
            f'text-anchor="middle" dominant-baseline="middle">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def ascii_picture(tiles: list[tuple[SlantTile, str | None]]) -> str:
    """One character cell per flat tile, two orientations per plane cell."""
    cells: dict[tuple[int, int], list[str]] = {}
    for s, label in tiles:
        f = flatten(s)
        slot = 0 if f.d2 == 2 else 1
        cell = cells.setdefault((f.base[0], f.base[1]), [" ", " "])
        cell[slot] = label or ("/" if slot == 0 else "\\")
    if not cells:
        return "\n"
    us = [u for u, _ in cells]
    vs = [v for _, v in cells]
    lines = []
    for v in range(max(vs), min(vs) - 1, -1):
        row = "".join("".join(cells.get((u, v), [" ", " "])) for u in range(min(us), max(us) + 1))
        lines.append(row.rstrip())
    return "\n".join(lines) + "\n"

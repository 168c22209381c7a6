"""ASCII and SVG drawings of planar images:
dots for points, a letter on marked points, dashed slanted bounding edges."""

from __future__ import annotations

from typing import Iterable, Sequence

from .curves import Disk
from .lattice import DigitalImage, Point

DOT = "·"


def _bounds(points: Iterable[Point]) -> tuple[int, int, int, int]:
    pts = list(points)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), max(xs), min(ys), max(ys)


def render_ascii(X: DigitalImage, marked: Iterable[Sequence[int]] = (), letter: str = "a") -> str:
    """One text row per y, top row first; cells separated by a space."""
    if X.dim != 2:
        raise ValueError("rendering needs a planar image")
    marks = {tuple(p) for p in marked}
    x0, x1, y0, y1 = _bounds(X.points)
    rows = []
    for y in range(y1, y0 - 1, -1):
        cells = []
        for x in range(x0, x1 + 1):
            p = (x, y)
            cells.append(letter if p in marks else DOT if p in X else " ")
        rows.append(" ".join(cells).rstrip())
    return "\n".join(rows) + "\n"


def render_svg(
    X: DigitalImage,
    marked: Iterable[Sequence[int]] = (),
    letter: str = "a",
    disks: Sequence[Disk] = (),
    scale: int = 32,
) -> str:
    """SVG with the y axis pointing up. Adjacency edges are drawn thin, disk
    bounding curves thick, slanted bounding edges dashed."""
    if X.dim != 2:
        raise ValueError("rendering needs a planar image")
    marks = {tuple(p) for p in marked}
    x0, x1, y0, y1 = _bounds(X.points)
    margin = 1
    width = (x1 - x0 + 2 * margin) * scale
    height = (y1 - y0 + 2 * margin) * scale

    def at(p: Sequence[int]) -> tuple[int, int]:
        return (p[0] - x0 + margin) * scale, (y1 - p[1] + margin) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        '<g id="edges" stroke="#999999" stroke-width="1">',
    ]
    for i, p in enumerate(X.points):
        for j in X.neighbor_indices[i]:
            if j > i:
                (ax, ay), (bx, by) = at(p), at(X.points[j])
                out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    out.append("</g>")
    out.append('<g id="curves" stroke="black" stroke-width="2" fill="none">')
    for disk in disks:
        for seg in disk.segments():
            (ax, ay), (bx, by) = at(seg.points[0]), at(seg.points[-1])
            dash = ' stroke-dasharray="6,4"' if seg.slanted else ""
            out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"{dash}/>')
    out.append("</g>")
    radius = max(2, scale // 10)
    out.append('<g id="points">')
    for p in X.points:
        cx, cy = at(p)
        if p in marks:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="{radius + 2}" fill="white" stroke="black"/>')
            out.append(
                f'<text x="{cx}" y="{cy + scale // 3}" font-size="{max(8, scale // 2)}" '
                f'font-style="italic" text-anchor="middle">{letter}</text>'
            )
        else:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="{radius}" fill="black"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

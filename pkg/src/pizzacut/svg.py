"""SVG 1.1 renderings of partitions and alpha-section chains.

The view box is the dough's bounding box plus a 5% margin, with y pointing
up. Styling is fixed so the output can be compared byte for byte.
"""
from __future__ import annotations

import colorsys
from typing import Iterable, Optional
from xml.sax.saxutils import quoteattr

import numpy as np

from .geom import ConvexPolygon, OrientedLine
from .partition import internal_nodes, leaves

MARGIN = 0.05


def _fmt(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _pts(vertices) -> Iterable[str]:
    return (f"{_fmt(x)},{_fmt(-y)}" for x, y in vertices)


def _path(vertices, closed=True) -> str:
    p = list(_pts(vertices))
    d = "M " + " L ".join(p)
    return d + " Z" if closed else d


def _tint(i: int, n: int) -> str:
    r, g, b = colorsys.hls_to_rgb((i / max(n, 1)) % 1.0, 0.75, 0.55)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def chord(P: ConvexPolygon, line: OrientedLine) -> Optional[np.ndarray]:
    """Endpoints of ``line`` inside ``P``, or None if it misses."""
    v = P.vertices
    d = np.array([line.side_of(p) for p in v])
    dn = np.roll(d, -1)
    vn = np.roll(v, -1, axis=0)
    ends = []
    for i in range(len(v)):
        if d[i] == 0.0:
            ends.append(v[i])
        elif d[i] * dn[i] < 0:
            r = d[i] / (d[i] - dn[i])
            ends.append(v[i] + r * (vn[i] - v[i]))
    if len(ends) < 2:
        return None
    ends = np.array(ends)
    c, s = line.cs
    along = ends @ np.array([c, s])
    return ends[[int(np.argmin(along)), int(np.argmax(along))]]


class _Canvas:
    def __init__(self, frame: ConvexPolygon):
        lo = frame.vertices.min(axis=0)
        hi = frame.vertices.max(axis=0)
        pad = MARGIN * (hi - lo)
        self.x0, self.y0 = lo[0] - pad[0], -(hi[1] + pad[1])
        self.w, self.h = (hi - lo) + 2 * pad
        self.stroke = 0.004 * max(self.w, self.h)
        self.items = []

    def add(self, elem: str):
        self.items.append("  " + elem)

    def polygon(self, cls, vertices, fill, stroke="#333333", opacity=1.0):
        self.add(f'<polygon class={quoteattr(cls)} points="{" ".join(_pts(vertices))}" '
                 f'fill="{fill}" fill-opacity="{_fmt(opacity)}" stroke="{stroke}" '
                 f'stroke-width="{_fmt(self.stroke)}"/>')

    def path(self, cls, d, fill="none", stroke="#000000", width=1.0, opacity=1.0):
        self.add(f'<path class={quoteattr(cls)} d="{d}" fill="{fill}" '
                 f'fill-opacity="{_fmt(opacity)}" stroke="{stroke}" '
                 f'stroke-width="{_fmt(width * self.stroke)}"/>')

    def render(self) -> str:
        head = ('<?xml version="1.0" encoding="UTF-8"?>\n'
                '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'viewBox="{_fmt(self.x0)} {_fmt(self.y0)} {_fmt(self.w)} {_fmt(self.h)}" '
                'width="600" height="600">\n')
        return head + "\n".join(self.items) + "\n</svg>\n"


def partition_svg(pizza, tree) -> str:
    """Slices tinted, topping shaded, one path per slice and one per cut."""
    cv = _Canvas(pizza.dough)
    cv.polygon("dough", pizza.dough.vertices, "#f3e2c0")
    slices = leaves(tree)
    for i, sl in enumerate(slices):
        cv.path("slice", _path(sl.vertices), fill=_tint(i, len(slices)), stroke="none",
                opacity=0.8)
    cv.polygon("topping", pizza.topping.vertices, "#c0392b", stroke="#7b241c", opacity=0.45)
    for node in internal_nodes(tree):
        seg = chord(node.piece, node.cut)
        if seg is not None:
            cv.path("cut", _path(seg, closed=False), width=1.5)
    return cv.render()


def chain_svg(body: ConvexPolygon, report) -> str:
    """The body, its shaded caps, and the chain chords."""
    cv = _Canvas(body)
    cv.polygon("body", body.vertices, "#f3e2c0")
    for cap in report.caps:
        cv.path("cap", _path(cap.vertices), fill="#2e86c1", stroke="none", opacity=0.15)
    for a, b in zip(report.points[:-1], report.points[1:]):
        cv.path("chord", _path([a.point, b.point], closed=False), stroke="#1b4f72")
    return cv.render()

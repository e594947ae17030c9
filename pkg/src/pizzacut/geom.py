"""Convex polygons, oriented lines, half-plane clipping and directional sections.

An oriented line is a point ``(theta, t)`` of the cylinder S^1 x R: the line
with direction ``u(theta) = (cos theta, sin theta)`` at signed distance ``t``
from the origin. Its plus side is ``<x, u'(theta)> >= t`` (left of the
direction of travel), its minus side ``<x, u'(theta)> <= t``, where
``u'(theta) = (-sin theta, cos theta)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import kernels
from .errors import GeometryError, NumericalFailure

TWO_PI = 2.0 * math.pi

EPS_GEOM = 1e-12  # sine of the turn angle below which a vertex counts as collinear
EPS_AREA_ABS = 1e-15
EPS_AREA_REL = 1e-9
EPS_CONTAIN = 1e-9  # times diameter(B)
EPS_SEC = 1e-12
EPS_DROP = 1e-12  # times polygon extent
SECTION_MAXITER = 80

PLUS = "plus"
MINUS = "minus"


class Point2(NamedTuple):
    x: float
    y: float


def direction_vectors(theta: float):
    """Return ``(u, u_prime)``: the unit direction and its +90 degree rotation."""
    c, s = math.cos(theta), math.sin(theta)
    return Point2(c, s), Point2(-s, c)


@dataclass(frozen=True)
class OrientedLine:
    theta: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.t)):
            raise GeometryError(f"non-finite line ({self.theta!r}, {self.t!r})")
        theta = math.fmod(float(self.theta), TWO_PI)
        if theta < 0.0:
            theta += TWO_PI
        if theta >= TWO_PI:
            theta = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "t", float(self.t))

    @classmethod
    def through(cls, p, q) -> "OrientedLine":
        """The line from ``p`` towards ``q``."""
        theta = math.atan2(q[1] - p[1], q[0] - p[0])
        return cls(theta, -p[0] * math.sin(theta) + p[1] * math.cos(theta))

    @property
    def cs(self):
        return math.cos(self.theta), math.sin(self.theta)

    def side_of(self, p) -> float:
        c, s = self.cs
        return -p[0] * s + p[1] * c - self.t

    def reversed(self) -> "OrientedLine":
        """Same geometric line, plus and minus sides swapped."""
        return OrientedLine(self.theta + math.pi, -self.t)

    def anchor(self) -> Point2:
        """Foot of the perpendicular from the origin."""
        c, s = self.cs
        return Point2(-s * self.t, c * self.t)

    def to_dict(self):
        return {"theta": self.theta, "t": self.t}


def side_of(line: OrientedLine, p) -> float:
    return line.side_of(p)


def _shoelace(v: np.ndarray) -> float:
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def _cleanup(v: np.ndarray, strict: bool) -> Optional[np.ndarray]:
    """Drop repeated and collinear vertices; check convexity and orientation.

    Returns None for degenerate input when ``strict`` is false, otherwise
    raises GeometryError with a message saying what to fix.
    """

    def fail(msg):
        if strict:
            raise GeometryError(msg)
        return None

    if v.ndim != 2 or v.shape[1] != 2:
        return fail(f"vertices must be an (n, 2) array, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        return fail("vertex coordinates must be finite")
    if len(v) < 3:
        return fail(f"a polygon needs at least 3 vertices, got {len(v)}")
    extent = float(np.hypot(*(v.max(axis=0) - v.min(axis=0))))
    if extent == 0.0:
        return fail("all vertices coincide")

    gap = np.hypot(*(np.roll(v, -1, axis=0) - v).T)
    v = v[gap > EPS_DROP * extent]
    changed = True
    while changed and len(v) >= 3:
        e_in = v - np.roll(v, 1, axis=0)
        e_out = np.roll(v, -1, axis=0) - v
        cross = e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0]
        dot = np.einsum("ij,ij->i", e_in, e_out)
        scale = np.hypot(*e_in.T) * np.hypot(*e_out.T)
        flat = np.abs(cross) <= EPS_GEOM * scale
        if np.any(flat & (dot < 0)):
            return fail("polygon folds back on itself (spike vertex)")
        changed = bool(flat.any())
        v = v[~flat]
    if len(v) < 3:
        return fail("polygon is degenerate (fewer than 3 non-collinear vertices)")

    e_in = v - np.roll(v, 1, axis=0)
    e_out = np.roll(v, -1, axis=0) - v
    cross = e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0]
    area = _shoelace(v - v[0])
    if area < 0:
        return fail("vertices are in clockwise order; reverse them")
    if np.any(cross < 0):
        i = int(np.argmin(cross))
        return fail(f"polygon is not convex at vertex {i} {tuple(v[i])}")
    turning = np.arctan2(cross, np.einsum("ij,ij->i", e_in, e_out)).sum()
    if abs(turning - TWO_PI) > 1e-6:
        return fail("polygon winds around more than once")
    if area <= EPS_AREA_ABS:
        return fail(f"polygon area {area!r} is too small")
    return np.ascontiguousarray(v, dtype=float)


class ConvexPolygon:
    """Counterclockwise convex polygon, immutable after construction.

    Coordinates are also kept relative to the vertex mean (``origin``) so
    the area kernels work on well-scaled numbers.
    """

    def __init__(self, vertices: Sequence):
        v = _cleanup(np.array(vertices, dtype=float), strict=True)
        self._setup(v)

    @classmethod
    def _try(cls, vertices) -> Optional["ConvexPolygon"]:
        v = _cleanup(np.array(vertices, dtype=float), strict=False)
        if v is None:
            return None
        obj = cls.__new__(cls)
        obj._setup(v)
        return obj

    @classmethod
    def from_points(cls, points) -> "ConvexPolygon":
        """Convex hull of a point cloud."""
        from scipy.spatial import ConvexHull

        pts = np.asarray(points, dtype=float)
        hull = ConvexHull(pts)
        return cls(pts[hull.vertices])

    def _setup(self, v: np.ndarray):
        v.flags.writeable = False
        self.vertices = v
        self.origin = v.mean(axis=0)
        local = v - self.origin
        self._lx = np.ascontiguousarray(local[:, 0])
        self._ly = np.ascontiguousarray(local[:, 1])
        self.area = _shoelace(local)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"ConvexPolygon(n={len(self)}, area={self.area:.6g})"

    @cached_property
    def extent(self) -> float:
        """Bounding-box diagonal; cheap stand-in for the diameter."""
        return float(np.hypot(*(self.vertices.max(axis=0) - self.vertices.min(axis=0))))

    @cached_property
    def diameter(self) -> float:
        d = self.vertices[:, None, :] - self.vertices[None, :, :]
        return float(np.sqrt(np.max(np.einsum("ijk,ijk->ij", d, d))))

    def as_list(self):
        return [[float(x), float(y)] for x, y in self.vertices]

    def local_offset(self, line: OrientedLine) -> float:
        """``line.t`` expressed in this polygon's local frame."""
        c, s = line.cs
        return line.t - (-self.origin[0] * s + self.origin[1] * c)

    def distance_outside(self, points) -> np.ndarray:
        """Largest signed distance of each point past an edge (<= 0 inside)."""
        p = np.atleast_2d(np.asarray(points, dtype=float))
        v = self.vertices
        e = np.roll(v, -1, axis=0) - v
        length = np.hypot(e[:, 0], e[:, 1])
        rel = p[:, None, :] - v[None, :, :]
        # right of a counterclockwise edge means outside
        cross = e[None, :, 0] * rel[:, :, 1] - e[None, :, 1] * rel[:, :, 0]
        return np.max(-cross / length[None, :], axis=1)

    def contains(self, p, tol: float = 0.0) -> bool:
        return bool(self.distance_outside(p)[0] <= tol)


def area(P: ConvexPolygon) -> float:
    return P.area


def clip(P: ConvexPolygon, line: OrientedLine, side: str = MINUS) -> Optional[ConvexPolygon]:
    """Intersect ``P`` with one closed side of ``line``; None when empty."""
    if side not in (PLUS, MINUS):
        raise ValueError(f"side must be 'plus' or 'minus', not {side!r}")
    c, s = line.cs
    t = P.local_offset(line)
    x, y = P._lx, P._ly
    d = -x * s + y * c - t
    if side == PLUS:
        d = -d
    inside = d <= 0.0
    if inside.all():
        return P
    if not inside.any():
        return None
    dn = np.roll(d, -1)
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    out = []
    for i in range(len(x)):
        if inside[i]:
            out.append((x[i], y[i]))
        if inside[i] != (dn[i] <= 0.0):
            r = d[i] / (d[i] - dn[i])
            out.append((x[i] + r * (xn[i] - x[i]), y[i] + r * (yn[i] - y[i])))
    if len(out) < 3:
        return None
    local = np.array(out)
    if _shoelace(local) <= EPS_AREA_ABS:
        return None
    return ConvexPolygon._try(local + P.origin)


def section_fraction(line: OrientedLine, P: ConvexPolygon) -> float:
    """Fraction of ``P``'s area on the minus side of ``line``."""
    c, s = line.cs
    a = kernels.cut_area(P._lx, P._ly, c, s, P.local_offset(line))
    return min(max(a / P.area, 0.0), 1.0)


def section_offset(P: ConvexPolygon, alpha: float, theta: float,
                   maxiter: int = SECTION_MAXITER):
    """Offset ``t`` of the alpha-section of direction ``theta``, plus the residual."""
    c, s = math.cos(theta), math.sin(theta)
    t_local, resid = kernels.section_offset(P._lx, P._ly, P.area, c, s, alpha, maxiter)
    return t_local + (-P.origin[0] * s + P.origin[1] * c), resid


def alpha_section(P: ConvexPolygon, alpha: float, theta: float,
                  eps: float = EPS_SEC, maxiter: int = SECTION_MAXITER) -> OrientedLine:
    """The unique line of direction ``theta`` leaving ``alpha * |P|`` on its minus side."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
    t, resid = section_offset(P, alpha, theta, maxiter)
    if resid > eps:
        raise NumericalFailure(
            f"alpha-section did not converge in {maxiter} iterations",
            alpha=alpha, theta=theta, residual=resid)
    return OrientedLine(theta, t)


@dataclass(frozen=True)
class Pizza:
    """A topping ``A`` nested inside a dough ``B``."""

    topping: ConvexPolygon
    dough: ConvexPolygon
    area_topping: float = field(init=False)
    area_dough: float = field(init=False)

    def __post_init__(self):
        tol = EPS_CONTAIN * self.dough.diameter
        out = self.dough.distance_outside(self.topping.vertices)
        if np.max(out) > tol:
            i = int(np.argmax(out))
            raise GeometryError(
                f"topping vertex {i} {tuple(self.topping.vertices[i])} lies "
                f"{out[i]:.3g} outside the dough (tolerance {tol:.3g})")
        if self.topping.area > self.dough.area * (1.0 + EPS_AREA_REL):
            raise GeometryError("topping area exceeds dough area")
        object.__setattr__(self, "area_topping", self.topping.area)
        object.__setattr__(self, "area_dough", self.dough.area)

    def body(self, which: str) -> ConvexPolygon:
        if which in ("topping", "A"):
            return self.topping
        if which in ("dough", "B"):
            return self.dough
        raise ValueError(f"unknown body {which!r}")

    @cached_property
    def _frame(self):
        # both bodies relative to the dough's origin, for paired kernels
        o = self.dough.origin
        a = self.topping.vertices - o
        return {
            "topping": (np.ascontiguousarray(a[:, 0]), np.ascontiguousarray(a[:, 1]),
                        self.topping.area),
            "dough": (self.dough._lx, self.dough._ly, self.dough.area),
        }

    def frame_arrays(self, which: str):
        return self._frame["topping" if which in ("topping", "A") else "dough"]

    def frame_shift(self, theta) -> np.ndarray:
        """Add to a frame offset to get the global ``t``."""
        o = self.dough.origin
        return -o[0] * np.sin(theta) + o[1] * np.cos(theta)


def regular_polygon(m: int, radius: float = 1.0, center=(0.0, 0.0),
                    phase: float = 0.0) -> ConvexPolygon:
    """Regular ``m``-gon inscribed in the circle of the given radius."""
    k = np.arange(m)
    ang = phase + TWO_PI * k / m
    return ConvexPolygon(np.column_stack([center[0] + radius * np.cos(ang),
                                          center[1] + radius * np.sin(ang)]))


def rectangle(x0, y0, x1, y1) -> ConvexPolygon:
    return ConvexPolygon([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])

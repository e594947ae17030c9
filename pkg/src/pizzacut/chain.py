"""Chains of consecutive alpha-sections inscribed in a convex body.

Starting from ``x0`` on the boundary, each next point ``x_i`` is chosen so
that the chord ``x_{i-1} -> x_i`` cuts off a cap of area ``alpha * |A|`` on
its minus (right) side. For a counterclockwise polygon that cap is bounded by
the counterclockwise boundary arc from ``x_{i-1}`` to ``x_i``. The report
collects how many caps cover sampled boundary and interior points.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from . import kernels
from .errors import NumericalFailure
from .geom import (EPS_SEC, MINUS, ConvexPolygon, OrientedLine, Point2, clip,
                   section_fraction)

MEMBERSHIP_TOL = 1e-9  # times diameter
BOUNDARY_SAMPLES = 512
INTERIOR_SAMPLES = 512


@dataclass(frozen=True)
class BoundaryPoint:
    edge_index: int
    fraction: float
    point: Point2


class Boundary:
    """Arc-length parameterisation of a polygon's boundary."""

    def __init__(self, P: ConvexPolygon):
        self.polygon = P
        v = P.vertices
        self.edges = np.roll(v, -1, axis=0) - v
        self.lengths = np.hypot(self.edges[:, 0], self.edges[:, 1])
        self.cum = np.concatenate([[0.0], np.cumsum(self.lengths)])
        self.perimeter = float(self.cum[-1])

    def position(self, bp: BoundaryPoint) -> float:
        return float(self.cum[bp.edge_index] + bp.fraction * self.lengths[bp.edge_index])

    def at(self, s: float) -> BoundaryPoint:
        s = s % self.perimeter
        e = int(np.searchsorted(self.cum, s, side="right")) - 1
        e = min(max(e, 0), len(self.lengths) - 1)
        f = min(max((s - self.cum[e]) / self.lengths[e], 0.0), 1.0)
        if f >= 1.0:
            e, f = (e + 1) % len(self.lengths), 0.0
        p = self.polygon.vertices[e] + f * self.edges[e]
        return BoundaryPoint(e, float(f), Point2(float(p[0]), float(p[1])))

    def points(self, positions) -> np.ndarray:
        return np.array([self.at(s).point for s in positions])

    def cap_area(self, s0: float, delta: float) -> float:
        P = self.polygon
        return kernels.arc_cap_area(P._lx, P._ly, self.cum, float(s0), float(delta))


def vertex_point(P: ConvexPolygon, i: int = 0) -> BoundaryPoint:
    v = P.vertices[i % len(P)]
    return BoundaryPoint(i % len(P), 0.0, Point2(float(v[0]), float(v[1])))


def _advance(boundary: Boundary, alpha: float, s0: float, maxiter: int = 200) -> float:
    """Arc length from ``s0`` to the next chain point."""
    target = alpha * boundary.polygon.area
    lo, hi = 0.0, boundary.perimeter
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if boundary.cap_area(s0, mid) < target:
            lo = mid
        else:
            hi = mid
    else:
        raise NumericalFailure("chain step bisection exhausted its budget",
                               alpha=alpha, bracket=(lo, hi))
    return 0.5 * (lo + hi)


def _chord(A: ConvexPolygon, alpha: float, x: BoundaryPoint, y: BoundaryPoint,
           eps: float) -> OrientedLine:
    line = OrientedLine.through(x.point, y.point)
    resid = abs(section_fraction(line, A) - alpha)
    if resid > eps:
        raise NumericalFailure("chain chord is not an alpha-section", alpha=alpha,
                               residual=resid)
    return line


def next_chain_point(A: ConvexPolygon, alpha: float, x: BoundaryPoint,
                     eps: float = EPS_SEC):
    """The next chain point after ``x`` and the chord through both."""
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"alpha must lie in (0, 1/2), got {alpha!r}")
    b = Boundary(A)
    s0 = b.position(x)
    y = b.at(s0 + _advance(b, alpha, s0))
    return y, _chord(A, alpha, x, y, eps)


def _line_arrays(lines):
    th = np.array([ln.theta for ln in lines])
    return np.cos(th), np.sin(th), np.array([ln.t for ln in lines])


def covering_numbers(lines, points, tol: float) -> np.ndarray:
    """For each point, how many of the lines have it on their minus side."""
    if len(lines) == 0:
        return np.zeros(len(points), dtype=int)
    c, s, t = _line_arrays(lines)
    p = np.atleast_2d(np.asarray(points, dtype=float))
    side = -p[:, 0:1] * s[None, :] + p[:, 1:2] * c[None, :] - t[None, :]
    return np.sum(side <= tol, axis=1)


def covering_number(caps, x, tol: float = 0.0) -> int:
    """Number of caps whose defining minus half-plane contains ``x``.

    ``caps`` holds OrientedLines or ``(polygon, line)`` pairs.
    """
    lines = [c if isinstance(c, OrientedLine) else c[1] for c in caps]
    return int(covering_numbers(lines, [x], tol)[0])


def interior_samples(P: ConvexPolygon, count: int = INTERIOR_SAMPLES) -> np.ndarray:
    """Deterministic quasi-random points of ``P`` (Halton, rejection in the bbox)."""
    from scipy.stats import qmc

    lo = P.vertices.min(axis=0)
    hi = P.vertices.max(axis=0)
    halton = qmc.Halton(d=2, scramble=False)
    halton.fast_forward(1)  # skip the corner point (0, 0)
    out = []
    while len(out) < count:
        pts = lo + halton.random(4 * count) * (hi - lo)
        out.extend(pts[P.distance_outside(pts) <= 0.0])
    return np.array(out[:count])


@dataclass
class ChainReport:
    alpha: float
    points: List[BoundaryPoint]
    lines: List[OrientedLine]
    caps: List[ConvexPolygon]
    k: int
    covering_samples: Dict[str, Dict[str, np.ndarray]]
    positions: np.ndarray  # unwrapped arc-length position of each chain point
    perimeter: float
    area: float
    diameter: float
    tol: float
    k_at_points: np.ndarray = field(default=None)
    arc_point_counts: np.ndarray = field(default=None)
    min_point_gap: float = 0.0

    @property
    def resolvable(self) -> bool:
        """Chain points are pairwise separated beyond the membership tolerance.

        Long chains converge onto a periodic orbit; once distinct chain points
        sit closer than rounding noise, which arc they belong to is undecidable
        and ``arc_point_counts`` stops being meaningful.
        """
        return self.min_point_gap > self.tol

    @property
    def n(self) -> int:
        return len(self.lines)

    @property
    def tours(self) -> int:
        """Complete laps made by the chain, from the arc-length bookkeeping."""
        return int(math.floor((self.positions[-1] - self.positions[0]) / self.perimeter
                              + 1e-12))

    @property
    def cap_area_sum(self) -> float:
        return float(sum(c.area for c in self.caps))

    @property
    def closure_residual(self) -> float:
        return float(math.dist(self.points[0].point, self.points[-1].point))

    def to_dict(self):
        bs = self.covering_samples["boundary"]
        it = self.covering_samples["interior"]
        return {
            "alpha": self.alpha,
            "n": self.n,
            "k": self.k,
            "tours": self.tours,
            "perimeter": self.perimeter,
            "area": self.area,
            "cap_area_sum": self.cap_area_sum,
            "closure_residual": self.closure_residual,
            "points": [{"edge_index": p.edge_index, "fraction": p.fraction,
                        "point": list(p.point)} for p in self.points],
            "lines": [ln.to_dict() for ln in self.lines],
            "caps": [c.as_list() for c in self.caps],
            "boundary_K": {"min": int(bs["K"].min()), "max": int(bs["K"].max())},
            "interior_K": {"min": int(it["K"].min()), "max": int(it["K"].max())},
            "K_at_points": self.k_at_points.tolist(),
            "arc_point_counts": self.arc_point_counts.tolist(),
            "min_point_gap": self.min_point_gap,
            "resolvable": self.resolvable,
        }


def arc_statistics(positions: np.ndarray, perimeter: float):
    """Covering numbers at chain points and chain points per arc.

    Works on unwrapped arc-length positions. ``K[m]`` counts the half-open
    arcs ``[x_{i-1}, x_i)`` containing ``x_m``, so a cap does not count its own
    end point. ``counts[m-1]`` is the number of chain points (by index) on the
    closed arc ``x_{m-1} -> x_m``.
    """
    S = np.asarray(positions, dtype=float)
    d = np.diff(S)
    K = np.array([int(np.sum(np.mod(S[m] - S[:-1], perimeter) < d)) for m in range(len(S))])
    counts = np.array([int(np.sum(np.mod(S - S[m - 1], perimeter) <= d[m - 1]))
                       for m in range(1, len(S))])
    return K, counts


def build_chain(A: ConvexPolygon, alpha: float, n: int, x0: Optional[BoundaryPoint] = None,
                boundary_samples: int = BOUNDARY_SAMPLES,
                interior_count: int = INTERIOR_SAMPLES, eps: float = EPS_SEC) -> ChainReport:
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"alpha must lie in (0, 1/2), got {alpha!r}")
    if n < 1:
        raise ValueError("a chain needs at least one step")
    b = Boundary(A)
    x = vertex_point(A) if x0 is None else x0
    s = b.position(x)
    points, lines, positions = [x], [], [s]
    for _ in range(n):
        s_next = s + _advance(b, alpha, s)
        y = b.at(s_next)
        lines.append(_chord(A, alpha, x, y, eps))
        points.append(y)
        positions.append(s_next)
        x, s = y, s_next
    caps = []
    for ln in lines:
        cap = clip(A, ln, MINUS)
        if cap is None:
            raise NumericalFailure("empty cap", line=ln.to_dict())
        caps.append(cap)

    tol = MEMBERSHIP_TOL * A.diameter
    bpos = b.perimeter * np.arange(boundary_samples) / boundary_samples
    bpts = b.points(bpos)
    ipts = interior_samples(A, interior_count)
    kb = covering_numbers(lines, bpts, tol)
    ki = covering_numbers(lines, ipts, tol)

    pos = np.array(positions)
    k_at, counts = arc_statistics(pos, b.perimeter)
    wrapped = np.sort(np.mod(pos, b.perimeter))
    gaps = np.diff(np.append(wrapped, wrapped[0] + b.perimeter))
    return ChainReport(
        alpha=alpha, points=points, lines=lines, caps=caps, k=int(kb.min()),
        covering_samples={"boundary": {"points": bpts, "K": kb},
                          "interior": {"points": ipts, "K": ki}},
        positions=pos, perimeter=b.perimeter, area=A.area, diameter=A.diameter,
        tol=tol, k_at_points=k_at, arc_point_counts=counts,
        min_point_gap=float(gaps.min()))

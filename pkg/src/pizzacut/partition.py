"""Fair partitions of a pizza into an even number of slices under the cutting rule.

The cutting rule: repeatedly pick one existing convex piece and split it in
two with a full straight line. The recursion is

* ``n = 2``: one line halving dough and topping at once;
* ``n = 4k``: a halving line, then ``2k`` slices on each half;
* ``n = 4k + 2``: with ``alpha = 2k/n``, either a single line that is an
  alpha-section of both bodies (``2k`` slices below it, ``2k + 2`` above),
  or, when no such line exists, a halving line followed by one fair slice
  shaved off each half and ``2k`` slices on each remainder.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Union

import numpy as np

from .errors import GeometryError, NumericalFailure, OddNError, WitnessFailure
from .geom import (EPS_AREA_REL, EPS_SEC, MINUS, PLUS, TWO_PI, ConvexPolygon,
                   OrientedLine, Pizza, clip, regular_polygon)
from .sections import bisect_angle, find_corollary_section, find_halving_cut, measure, scan

EPS_FAIR = 1e-6
SUBCASE_SAMPLES = 1024
DEFICIENCY_DIRECTIONS = 256


@dataclass(frozen=True, eq=False)
class Slice:
    slice: ConvexPolygon

    @property
    def piece(self) -> ConvexPolygon:
        return self.slice


@dataclass(frozen=True, eq=False)
class CutNode:
    """``left`` is the plus side of ``cut``, ``right`` the minus side."""

    piece: ConvexPolygon
    cut: OrientedLine
    left: "PartitionTree"
    right: "PartitionTree"


PartitionTree = Union[Slice, CutNode]


def leaves(tree: PartitionTree) -> List[ConvexPolygon]:
    if isinstance(tree, Slice):
        return [tree.slice]
    return leaves(tree.left) + leaves(tree.right)


def cut_paths(tree: PartitionTree, path=()):
    """Yield ``(slice, [(line, side), ...])`` for every leaf, root first."""
    if isinstance(tree, Slice):
        yield tree.slice, list(path)
        return
    yield from cut_paths(tree.left, path + ((tree.cut, PLUS),))
    yield from cut_paths(tree.right, path + ((tree.cut, MINUS),))


def internal_nodes(tree: PartitionTree):
    if isinstance(tree, CutNode):
        yield tree
        yield from internal_nodes(tree.left)
        yield from internal_nodes(tree.right)


def follows_cutting_rule(tree: PartitionTree, rel_tol: float = EPS_AREA_REL) -> bool:
    """Every node's children are exactly the two clips of its piece by its cut."""
    for node in internal_nodes(tree):
        for child, side in ((node.left, PLUS), (node.right, MINUS)):
            expected = clip(node.piece, node.cut, side)
            if expected is None:
                return False
            got = child.piece
            if abs(got.area - expected.area) > rel_tol * node.piece.area:
                return False
            tol = 1e-9 * node.piece.extent
            if np.max(expected.distance_outside(got.vertices)) > tol:
                return False
            if np.max(got.distance_outside(expected.vertices)) > tol:
                return False
        if abs(node.left.piece.area + node.right.piece.area - node.piece.area) \
                > rel_tol * node.piece.area:
            return False
    return True


def _split(pz: Pizza, line: OrientedLine):
    """The sub-pizzas on the plus and minus sides of ``line``."""
    parts = []
    for side in (PLUS, MINUS):
        dough = clip(pz.dough, line, side)
        top = clip(pz.topping, line, side)
        if dough is None or top is None:
            raise NumericalFailure("cut leaves a piece without dough or topping",
                                   cut=line.to_dict(), side=side)
        parts.append(Pizza(top, dough))
    return parts


def fair_partition(pizza: Pizza, n: int, *, samples: int = SUBCASE_SAMPLES,
                   eps: float = EPS_SEC) -> PartitionTree:
    """Cut ``pizza`` into ``n`` slices with equal dough and equal topping.

    Raises OddNError for odd ``n``: no cut is attempted, since for some pizzas
    (concentric disks) no fair partition exists.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if n % 2:
        raise OddNError(f"n = {n} is odd; a fair partition obeying the cutting rule "
                        "may not exist", n=n)
    return _partition(pizza, n, samples, eps)


def _partition(pz: Pizza, n: int, samples: int, eps: float) -> PartitionTree:
    if n == 1:
        return Slice(pz.dough)
    if n == 2 or n % 4 == 0:
        line = find_halving_cut(pz, eps=eps)
        plus, minus = _split(pz, line)
        return CutNode(pz.dough, line, _partition(plus, n // 2, samples, eps),
                       _partition(minus, n // 2, samples, eps))

    k = (n - 2) // 4
    alpha = 2 * k / n
    line = simultaneous_alpha_cut(pz, alpha, samples, eps)
    if line is not None:
        plus, minus = _split(pz, line)
        return CutNode(pz.dough, line, _partition(plus, 2 * k + 2, samples, eps),
                       _partition(minus, 2 * k, samples, eps))

    halving = find_halving_cut(pz, eps=eps)
    halves = []
    for half in _split(pz, halving):
        sl, rest, cut = fair_slice_from_half(pz, half.dough, halving, n, eps=eps,
                                             samples=samples, _half_pizza=half)
        rest_pz, _ = _split(half, cut)
        halves.append(CutNode(half.dough, cut, _partition(rest_pz, 2 * k, samples, eps),
                              Slice(sl)))
    return CutNode(pz.dough, halving, halves[0], halves[1])


def simultaneous_alpha_cut(pz: Pizza, alpha: float, samples: int = SUBCASE_SAMPLES,
                           eps: float = EPS_SEC) -> Optional[OrientedLine]:
    """A line cutting ``alpha`` of both bodies on its minus side, or None.

    Scans ``h(theta)`` = topping fraction under the dough's alpha-section minus
    alpha, taking the first near-zero sample or sign change (cyclically).
    """
    step = TWO_PI / samples
    thetas = step * np.arange(samples)
    _, fr, rs = scan(pz, alpha, thetas, "dough")
    if np.max(rs) > eps:
        raise NumericalFailure("alpha-section bisection did not reach tolerance",
                               residual=float(np.max(rs)))
    h = fr - alpha

    def hfun(theta):
        return measure(pz, alpha, theta, "dough")[1] - alpha

    for j in range(samples):
        if abs(h[j]) <= eps:
            return measure(pz, alpha, float(thetas[j]), "dough")[0]
        nxt = h[(j + 1) % samples]
        if h[j] * nxt < 0 and abs(nxt) > eps:
            theta, gap = bisect_angle(hfun, float(thetas[j]), float(thetas[j]) + step,
                                      float(h[j]), float(nxt), eps)
            if abs(gap) > eps:
                raise NumericalFailure("simultaneous alpha-cut bisection stalled",
                                       alpha=alpha, gap=gap, theta=theta)
            return measure(pz, alpha, theta, "dough")[0]
    return None


def fair_slice_from_half(pizza: Pizza, half: ConvexPolygon, halving_cut: OrientedLine,
                         n: int, *, eps: float = EPS_SEC, samples: int = SUBCASE_SAMPLES,
                         _half_pizza: Optional[Pizza] = None):
    """Shave one fair slice off a fair half with a single cut.

    The slice is the minus side of a ``2/n``-section of ``half``. Directions
    are searched between the strip parallel to ``halving_cut`` (too much
    topping) and the dough-section taking the least topping (too little).
    Returns ``(slice, remainder, cut)``.
    """
    if n < 6 or n % 4 != 2:
        raise ValueError(f"fair_slice_from_half needs n = 4k + 2 >= 6, got {n}")
    side = PLUS if halving_cut.side_of(half.origin) > 0 else MINUS
    if _half_pizza is None:
        top = clip(pizza.topping, halving_cut, side)
        if top is None:
            raise GeometryError("half carries no topping")
        _half_pizza = Pizza(top, half)
    hp = _half_pizza
    for got, want, what in ((hp.area_dough, pizza.area_dough, "dough"),
                            (hp.area_topping, pizza.area_topping, "topping")):
        if abs(got - want / 2) > EPS_FAIR * want / 2:
            raise GeometryError(f"half is not fair: {what} {got!r} vs {want / 2!r}")

    beta = 2.0 / n

    def f(theta):
        return measure(hp, beta, theta, "dough")[1] - beta

    # minus side of this direction is the strip touching the halving cut
    theta1 = halving_cut.theta if side == PLUS else halving_cut.theta + math.pi
    theta1 = math.fmod(theta1, TWO_PI)
    f1 = f(theta1)
    if abs(f1) <= eps:
        theta = theta1
    else:
        theta2 = find_corollary_section(hp, beta, samples=samples, eps=eps).line.theta
        f2 = f(theta2)
        if abs(f2) <= eps:
            theta = theta2
        elif f1 > 0 > f2:
            delta = math.remainder(theta2 - theta1, TWO_PI)
            a, b, fa, fb = (theta1, theta1 + delta, f1, f2) if delta > 0 else \
                (theta1 + delta, theta1, f2, f1)
            theta, gap = bisect_angle(f, a, b, fa, fb, eps)
            if abs(gap) > eps:
                raise NumericalFailure("fair slice bisection stalled", gap=gap)
        else:
            raise NumericalFailure("fair slice bracket does not hold", f_strip=f1,
                                   f_corollary=f2, theta_strip=theta1, theta_corollary=theta2)
    line, _, resid = measure(hp, beta, theta, "dough")
    if resid > eps:
        raise NumericalFailure("slice section residual too large", residual=resid)
    piece = clip(half, line, MINUS)
    rest = clip(half, line, PLUS)
    if piece is None or rest is None:
        raise NumericalFailure("slice cut degenerated", cut=line.to_dict())
    return piece, rest, line


@dataclass
class FairnessReport:
    n: int
    dough_areas: List[float]
    topping_areas: List[float]
    target_dough: float
    target_topping: float
    max_dough_deviation: float
    max_topping_deviation: float
    dough_sum_error: float
    topping_sum_error: float
    slices_match_cuts: bool
    tol: float
    fair: bool = field(init=False)
    tiles: bool = field(init=False)

    def __post_init__(self):
        self.tiles = (self.dough_sum_error <= EPS_AREA_REL
                      and self.topping_sum_error <= EPS_AREA_REL)
        self.fair = (self.max_dough_deviation <= self.tol
                     and self.max_topping_deviation <= self.tol and self.tiles)

    @property
    def max_deviation(self) -> float:
        return max(self.max_dough_deviation, self.max_topping_deviation)

    def to_dict(self):
        return {
            "n": self.n,
            "fair": self.fair,
            "tol": self.tol,
            "max_dough_deviation": self.max_dough_deviation,
            "max_topping_deviation": self.max_topping_deviation,
            "target_dough": self.target_dough,
            "target_topping": self.target_topping,
            "dough_areas": self.dough_areas,
            "topping_areas": self.topping_areas,
            "dough_sum_error": self.dough_sum_error,
            "topping_sum_error": self.topping_sum_error,
            "tiles": self.tiles,
            "slices_match_cuts": self.slices_match_cuts,
        }


def _clip_path(body: ConvexPolygon, path) -> Optional[ConvexPolygon]:
    for line, side in path:
        body = clip(body, line, side)
        if body is None:
            return None
    return body


def verify_partition(pizza: Pizza, tree: PartitionTree, tol: float = EPS_FAIR) -> FairnessReport:
    """Recompute every slice from the cuts on its root path and measure it."""
    dough, top, match = [], [], True
    for stored, path in cut_paths(tree):
        d = _clip_path(pizza.dough, path)
        a = _clip_path(pizza.topping, path)
        dough.append(0.0 if d is None else d.area)
        top.append(0.0 if a is None else a.area)
        if d is None or abs(d.area - stored.area) > EPS_AREA_REL * pizza.area_dough:
            match = False
    n = len(dough)
    td, ta = pizza.area_dough / n, pizza.area_topping / n
    return FairnessReport(
        n=n,
        dough_areas=dough,
        topping_areas=top,
        target_dough=td,
        target_topping=ta,
        max_dough_deviation=max(abs(x - td) for x in dough) / td,
        max_topping_deviation=max(abs(x - ta) for x in top) / ta,
        dough_sum_error=abs(sum(dough) - pizza.area_dough) / pizza.area_dough,
        topping_sum_error=abs(sum(top) - pizza.area_topping) / pizza.area_topping,
        slices_match_cuts=match,
        tol=tol,
    )


def disk_margin(m: int) -> float:
    """Discretisation allowance for fractions of inscribed ``m``-gons."""
    return 10.0 * (TWO_PI / m) ** 2


@dataclass
class DeficiencyReport:
    r: float
    R: float
    m: int
    margin: float
    betas: List[float]
    min_slack: List[float]
    mean_topping_fraction: List[float]
    holds: bool

    def to_dict(self):
        return dict(self.__dict__)


def check_disk_deficiency(r: float, R: float, m: int = 512, betas=(1 / 3, 1 / 5, 2 / 5),
                          directions: int = DEFICIENCY_DIRECTIONS, strict: bool = True,
                          eps: float = EPS_SEC) -> DeficiencyReport:
    """Check that dough beta-sections of concentric disks starve the topping.

    For every beta and sampled direction, the slack ``beta - f`` (``f`` the
    topping fraction under the dough's beta-section) must exceed the
    polygon margin. With ``strict`` a violation raises WitnessFailure; ``r == R``
    is accepted and reports zero slack.
    """
    if not 0 < r <= R:
        raise ValueError(f"need 0 < r <= R, got r={r!r}, R={R!r}")
    if m < 64:
        raise ValueError("use at least 64 polygon vertices")
    pz = Pizza(regular_polygon(m, r), regular_polygon(m, R))
    margin = disk_margin(m)
    thetas = TWO_PI * np.arange(directions) / directions
    slacks, means = [], []
    for beta in betas:
        if not 0 < beta < 0.5:
            raise ValueError(f"beta must lie in (0, 1/2), got {beta!r}")
        _, fr, rs = scan(pz, beta, thetas, "dough")
        if np.max(rs) > eps:
            raise NumericalFailure("dough section did not converge", beta=beta)
        slacks.append(float(np.min(beta - fr)))
        means.append(float(np.mean(fr)))
    holds = all(s > margin for s in slacks)
    report = DeficiencyReport(r, R, m, margin, list(betas), slacks, means, holds)
    if strict and not holds:
        raise WitnessFailure("a dough section is not topping-deficient beyond the margin",
                             **report.to_dict())
    return report

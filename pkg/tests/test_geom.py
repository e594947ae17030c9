import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pizzacut import geom
from pizzacut.errors import GeometryError, NumericalFailure
from pizzacut.geom import (MINUS, PLUS, ConvexPolygon, OrientedLine, Pizza, alpha_section,
                           clip, rectangle, regular_polygon, section_fraction)
from pizzacut.generate import random_convex

UNIT = rectangle(0, 0, 1, 1)


def test_line_normalises_theta_and_types():
    ln = OrientedLine(-math.pi / 2, np.float64(0.25))
    assert ln.theta == pytest.approx(3 * math.pi / 2)
    assert type(ln.t) is float
    with pytest.raises(GeometryError):
        OrientedLine(float("nan"), 0.0)


def test_side_convention_minus_is_right_of_direction():
    ln = OrientedLine(0.0, 0.5)  # horizontal y = 0.5, pointing +x
    assert ln.side_of((0.0, 0.0)) < 0  # below is the minus side
    piece = clip(UNIT, ln, MINUS)
    assert piece.area == pytest.approx(0.5)
    assert piece.vertices[:, 1].max() == pytest.approx(0.5)


def test_through_puts_both_points_on_the_line():
    p, q = (0.3, -1.2), (2.0, 0.7)
    ln = OrientedLine.through(p, q)
    assert abs(ln.side_of(p)) < 1e-15 and abs(ln.side_of(q)) < 1e-15


def test_unit_square_area_and_half_cut():
    assert UNIT.area == 1.0
    assert section_fraction(OrientedLine(math.pi / 2, -0.5), UNIT) == pytest.approx(0.5)


def test_clockwise_input_is_rejected():
    with pytest.raises(GeometryError):
        ConvexPolygon([[0, 0], [0, 1], [1, 1], [1, 0]])


def test_nonconvex_input_is_rejected():
    with pytest.raises(GeometryError):
        ConvexPolygon([[0, 0], [2, 0], [1, 0.2], [2, 2], [0, 2]])


def test_collinear_and_duplicate_vertices_are_dropped():
    P = ConvexPolygon([[0, 0], [0.5, 0], [1, 0], [1, 0], [1, 1], [0, 1]])
    assert len(P) == 4 and P.area == pytest.approx(1.0)


def test_degenerate_polygon_is_rejected():
    with pytest.raises(GeometryError):
        ConvexPolygon([[0, 0], [1, 0], [2, 0]])


def test_clip_missing_the_body_returns_none():
    assert clip(UNIT, OrientedLine(0.0, -1.0), MINUS) is None
    assert clip(UNIT, OrientedLine(0.0, -1.0), PLUS).area == pytest.approx(1.0)


def test_regular_polygon_area_approaches_the_disk():
    P = regular_polygon(4096, 2.0)
    assert P.area == pytest.approx(4 * math.pi, rel=1e-5)


def test_pizza_requires_nesting():
    with pytest.raises(GeometryError):
        Pizza(rectangle(0, 0, 3, 3), rectangle(0, 0, 2, 2))


def test_alpha_section_residual_and_failure():
    ln = alpha_section(UNIT, 0.3, 0.7)
    assert abs(section_fraction(ln, UNIT) - 0.3) <= 1e-12
    with pytest.raises(NumericalFailure):
        alpha_section(UNIT, 0.3, 0.7, maxiter=3)


def test_section_offset_is_continuous_in_theta():
    P = random_convex(np.random.default_rng(3))
    ts = [geom.section_offset(P, 0.2, th)[0] for th in np.linspace(0, 2 * math.pi, 2001)]
    assert np.max(np.abs(np.diff(ts))) < 0.01 * P.diameter


@pytest.mark.parametrize("seed", range(5))
def test_clip_additivity(seed):
    rng = np.random.default_rng(seed)
    P = random_convex(rng)
    for _ in range(50):
        ln = OrientedLine(rng.uniform(0, 2 * math.pi), rng.uniform(-0.3, 0.3))
        parts = [clip(P, ln, s) for s in (PLUS, MINUS)]
        total = sum(p.area for p in parts if p is not None)
        assert total == pytest.approx(P.area, rel=1e-9)


@pytest.mark.parametrize("seed", range(3))
def test_monte_carlo_fraction(seed):
    rng = np.random.default_rng(100 + seed)
    P = random_convex(rng)
    ln = alpha_section(P, rng.uniform(0.1, 0.45), rng.uniform(0, 2 * math.pi))
    lo, hi = P.vertices.min(axis=0), P.vertices.max(axis=0)
    pts = lo + rng.random((200_000, 2)) * (hi - lo)
    pts = pts[P.distance_outside(pts) <= 0]
    c, s = ln.cs
    mc = np.mean(-pts[:, 0] * s + pts[:, 1] * c <= ln.t)
    assert mc == pytest.approx(section_fraction(ln, P), abs=5e-3)


angles = st.floats(0, 2 * math.pi, allow_nan=False)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000), theta=angles, alpha=st.floats(0.01, 0.99))
def test_reversal_swaps_fractions(seed, theta, alpha):
    P = random_convex(np.random.default_rng(seed))
    ln = alpha_section(P, alpha, theta)
    assert section_fraction(ln.reversed(), P) == pytest.approx(1 - alpha, abs=1e-11)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000), theta=angles, alpha=st.floats(0.01, 0.49))
def test_section_is_unique_per_direction(seed, theta, alpha):
    P = random_convex(np.random.default_rng(seed))
    t, _ = geom.section_offset(P, alpha, theta)
    h = 1e-6 * P.diameter
    assert section_fraction(OrientedLine(theta, t - h), P) < alpha
    assert section_fraction(OrientedLine(theta, t + h), P) > alpha


@settings(max_examples=40, deadline=None)
@given(dx=st.floats(-50, 50), dy=st.floats(-50, 50), theta=angles)
def test_translation_invariance(dx, dy, theta):
    P = regular_polygon(7, 1.0)
    Q = regular_polygon(7, 1.0, center=(dx, dy))
    a = alpha_section(P, 0.3, theta)
    b = alpha_section(Q, 0.3, theta)
    c, s = a.cs
    assert b.t - a.t == pytest.approx(-dx * s + dy * c, abs=1e-9)

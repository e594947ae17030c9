"""The numba kernels and their numpy twins must agree."""
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from pizzacut import _vectorized as vec
from pizzacut import kernels
from pizzacut.chain import Boundary
from pizzacut.generate import random_convex
from pizzacut.geom import MINUS, OrientedLine, clip

loops = pytest.importorskip("pizzacut._loops")


@pytest.fixture(scope="module")
def poly():
    return random_convex(np.random.default_rng(11), points=20)


def test_cut_area_matches_clip(poly):
    rng = np.random.default_rng(0)
    for _ in range(200):
        th, t = rng.uniform(0, 2 * math.pi), rng.uniform(-0.4, 0.4)
        ln = OrientedLine(th, t)
        piece = clip(poly, ln, MINUS)
        expect = 0.0 if piece is None else piece.area
        tl = poly.local_offset(ln)
        for mod in (loops, vec):
            got = mod.cut_area(poly._lx, poly._ly, math.cos(th), math.sin(th), tl)
            assert got == pytest.approx(expect, abs=1e-13)


def test_cut_areas_backends_agree(poly):
    rng = np.random.default_rng(1)
    th = rng.uniform(0, 2 * math.pi, 500)
    c, s, t = np.cos(th), np.sin(th), rng.uniform(-0.5, 0.5, 500)
    a = loops.cut_areas(poly._lx, poly._ly, c, s, t)
    b = vec.cut_areas(poly._lx, poly._ly, c, s, t)
    np.testing.assert_allclose(a, b, atol=1e-14)


def test_section_profile_backends_agree(poly):
    inner = poly  # any second body works for the parity check
    th = np.linspace(0, 2 * math.pi, 257)
    args = (poly._lx, poly._ly, poly.area, inner._lx, inner._ly, inner.area, 0.3, th, 80)
    ta, fa, ra = loops.section_profile(*args)
    tb, fb, rb = vec.section_profile(*args)
    np.testing.assert_allclose(ta, tb, atol=1e-12)
    np.testing.assert_allclose(fa, fb, atol=1e-11)
    assert ra.max() <= 1e-12 and rb.max() <= 1e-12


def test_arc_cap_area_backends_agree(poly):
    b = Boundary(poly)
    rng = np.random.default_rng(2)
    for s0, d in zip(rng.uniform(0, 3 * b.perimeter, 100), rng.uniform(0, b.perimeter, 100)):
        x = loops.arc_cap_area(poly._lx, poly._ly, b.cum, s0, d)
        y = vec.arc_cap_area(poly._lx, poly._ly, b.cum, s0, d)
        assert x == pytest.approx(y, abs=1e-13)


def test_arc_cap_area_matches_clip(poly):
    b = Boundary(poly)
    for s0, d in [(0.0, 0.3), (0.1, 0.9), (b.perimeter - 0.05, 0.4), (b.cum[3], b.cum[5] - b.cum[3])]:
        x, y = b.at(s0).point, b.at(s0 + d).point
        cap = clip(poly, OrientedLine.through(x, y), MINUS)
        expect = 0.0 if cap is None else cap.area  # both ends on one edge: empty cap
        assert kernels.arc_cap_area(poly._lx, poly._ly, b.cum, s0, d) == \
            pytest.approx(expect, abs=1e-13)


def test_env_flag_selects_numpy_backend():
    env = dict(os.environ, PIZZACUT_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "import pizzacut.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"

"""Searches over the direction circle for lines that section two nested bodies.

For a direction ``theta`` the alpha-section of one body is unique, so every
search here is a one-dimensional problem in ``theta``: sample the companion
fraction on a uniform grid, then polish the best sample (golden section for
extrema, bisection for sign changes).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NumericalFailure, TheoremViolation
from .geom import EPS_SEC, SECTION_MAXITER, TWO_PI, OrientedLine, Pizza

EPS_THM = 1e-6
SCAN_SAMPLES = 1024
HALVING_SAMPLES = 256
TIE_TOL = 1e-14  # fractions closer than this to the best count as ties

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

_ALIASES = {
    "sectionA": "topping", "A": "topping", "topping": "topping",
    "sectionB": "dough", "B": "dough", "dough": "dough",
}


def _body_key(which: str) -> str:
    try:
        return _ALIASES[which]
    except KeyError:
        raise ValueError(f"which must be one of {sorted(_ALIASES)}, got {which!r}") from None


def _other(key: str) -> str:
    return "dough" if key == "topping" else "topping"


@dataclass(frozen=True)
class SectionProfile:
    alpha: float
    thetas: np.ndarray
    offsets: np.ndarray
    fractions: np.ndarray
    body_tag: str

    def max_jump(self) -> float:
        """Largest change between cyclically adjacent fraction samples."""
        return float(np.max(np.abs(np.diff(self.fractions, append=self.fractions[:1]))))

    def rows(self):
        return zip(self.thetas.tolist(), self.offsets.tolist(), self.fractions.tolist())


@dataclass(frozen=True)
class SimultaneousSection:
    """A line that is an ``alpha``-section of ``body`` and a ``beta``-section of the other."""

    line: OrientedLine
    alpha: float
    beta: float
    residual: float
    body: str = "topping"

    def to_dict(self):
        return {
            "line": self.line.to_dict(),
            "alpha": self.alpha,
            "beta": self.beta,
            "residual": self.residual,
            "sectioned_body": self.body,
        }


def scan(pizza: Pizza, alpha: float, thetas, section_of: str = "topping",
         maxiter: int = SECTION_MAXITER):
    """Sections of one body along ``thetas`` and the other body's fractions.

    Returns ``(offsets, fractions, residuals)`` as arrays; offsets are global.
    """
    key = _body_key(section_of)
    thetas = np.ascontiguousarray(np.atleast_1d(np.asarray(thetas, dtype=float)))
    xs, ys, area = pizza.frame_arrays(key)
    oxs, oys, oarea = pizza.frame_arrays(_other(key))
    ts, fr, rs = kernels.section_profile(xs, ys, area, oxs, oys, oarea,
                                         float(alpha), thetas, maxiter)
    return ts + pizza.frame_shift(thetas), fr, rs


def measure(pizza: Pizza, alpha: float, theta: float, section_of: str = "topping"):
    """``(line, other_fraction, residual)`` for one direction."""
    ts, fr, rs = scan(pizza, alpha, [theta], section_of)
    return OrientedLine(theta, ts[0]), float(fr[0]), float(rs[0])


def _check_residuals(resid, eps, **diag):
    worst = float(np.max(resid))
    if worst > eps:
        raise NumericalFailure("alpha-section bisection did not reach tolerance",
                               residual=worst, tolerance=eps, **diag)


def profile(pizza: Pizza, alpha: float, which: str = "sectionA",
            samples: int = SCAN_SAMPLES, eps: float = EPS_SEC) -> SectionProfile:
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
    if samples < 16:
        raise ValueError("profile needs at least 16 samples")
    key = _body_key(which)
    thetas = TWO_PI * np.arange(samples) / samples
    ts, fr, rs = scan(pizza, alpha, thetas, key)
    _check_residuals(rs, eps, alpha=alpha)
    return SectionProfile(alpha, thetas, ts, fr, key)


def golden_max(f, a: float, b: float, tol: float = 1e-12, maxiter: int = 200):
    """Maximise a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(maxiter):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def bisect_angle(g, a: float, b: float, ga: float, gb: float,
                 eps: float = EPS_SEC, maxiter: int = 200):
    """Root of ``g`` on ``[a, b]`` given opposite signs at the ends.

    Stops once ``|g| <= eps / 100`` or the bracket stops shrinking, and
    returns the evaluated point with the smallest ``|g|``.
    """
    if ga * gb > 0:
        raise NumericalFailure("angle bracket has no sign change", g_a=ga, g_b=gb)
    best = (a, ga) if abs(ga) <= abs(gb) else (b, gb)
    for _ in range(maxiter):
        m = 0.5 * (a + b)
        if not a < m < b:
            break
        gm = g(m)
        if abs(gm) < abs(best[1]):
            best = (m, gm)
        if abs(gm) <= eps * 1e-2:
            break
        if (gm < 0) == (ga < 0):
            a, ga = m, gm
        else:
            b, gb = m, gm
    return best


def _extremum(pizza: Pizza, alpha: float, section_of: str, sign: float,
              samples: int, eps: float):
    """Grid scan plus golden-section polish of ``sign * fraction``."""
    thetas = TWO_PI * np.arange(samples) / samples
    ts, fr, rs = scan(pizza, alpha, thetas, section_of)
    _check_residuals(rs, eps, alpha=alpha)
    vals = sign * fr
    # smallest theta among ties keeps the answer deterministic
    i = int(np.flatnonzero(vals >= vals.max() - TIE_TOL)[0])
    best = (float(thetas[i]), float(ts[i]), float(fr[i]), float(rs[i]))

    if vals.max() - vals.min() > TIE_TOL:
        step = TWO_PI / samples

        def f(theta):
            return sign * measure(pizza, alpha, theta, section_of)[1]

        theta, val = golden_max(f, best[0] - step, best[0] + step)
        if val > sign * best[2] + TIE_TOL:
            line, frac, resid = measure(pizza, alpha, theta, section_of)
            if resid <= eps:
                best = (line.theta, line.t, frac, resid)
    theta, t, frac, resid = best
    return OrientedLine(theta, t), frac, resid


def find_simultaneous_section(pizza: Pizza, alpha: float, samples: int = SCAN_SAMPLES,
                              eps: float = EPS_SEC, eps_thm: float = EPS_THM
                              ) -> SimultaneousSection:
    """An alpha-section of the topping cutting at least alpha of the dough.

    Picks the direction maximising the dough fraction. Raises
    TheoremViolation if even the best direction falls short of ``alpha``.
    """
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"alpha must lie in (0, 1/2), got {alpha!r}")
    line, beta, resid = _extremum(pizza, alpha, "topping", 1.0, samples, eps)
    if beta < alpha - eps_thm:
        raise TheoremViolation("no alpha-section of the topping reaches alpha of the dough",
                               alpha=alpha, best_beta=beta, theta=line.theta)
    return SimultaneousSection(line, alpha, beta, resid, "topping")


def find_corollary_section(pizza: Pizza, alpha: float, samples: int = SCAN_SAMPLES,
                           eps: float = EPS_SEC, eps_thm: float = EPS_THM
                           ) -> SimultaneousSection:
    """An alpha-section of the dough cutting at most alpha of the topping."""
    if not 0.0 < alpha < 0.5:
        raise ValueError(f"alpha must lie in (0, 1/2), got {alpha!r}")
    line, beta, resid = _extremum(pizza, alpha, "dough", -1.0, samples, eps)
    if beta > alpha + eps_thm:
        raise TheoremViolation("every alpha-section of the dough takes more than alpha "
                               "of the topping", alpha=alpha, best_beta=beta,
                               theta=line.theta)
    return SimultaneousSection(line, alpha, beta, resid, "dough")


def halving_gap(pizza: Pizza, thetas):
    """``g(theta)``: topping fraction under the dough's half-section, minus 1/2."""
    _, fr, rs = scan(pizza, 0.5, thetas, "dough")
    return fr - 0.5, rs


def find_halving_cut(pizza: Pizza, samples: int = HALVING_SAMPLES,
                     eps: float = EPS_SEC) -> OrientedLine:
    """A single line halving both the dough and the topping.

    ``g(theta + pi) = -g(theta)``, so ``g`` changes sign on ``[0, pi]``; the
    first sign change among ``samples + 1`` grid points is bisected.
    """
    thetas = np.linspace(0.0, math.pi, samples + 1)
    g, rs = halving_gap(pizza, thetas)
    _check_residuals(rs, eps)

    def gfun(theta):
        return float(halving_gap(pizza, [theta])[0][0])

    root = None
    for j in range(samples + 1):
        if abs(g[j]) <= eps:
            root = (float(thetas[j]), float(g[j]))
            break
        if j < samples and g[j] * g[j + 1] < 0:
            root = bisect_angle(gfun, float(thetas[j]), float(thetas[j + 1]),
                                float(g[j]), float(g[j + 1]), eps)
            break
    if root is None or abs(root[1]) > eps:
        raise NumericalFailure("halving cut search failed",
                               best_gap=None if root is None else root[1])
    line, _, resid = measure(pizza, 0.5, root[0], "dough")
    if resid > eps:
        raise NumericalFailure("halving cut misses the dough half", residual=resid)
    return line

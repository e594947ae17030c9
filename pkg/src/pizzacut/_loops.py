"""Numba kernels. Loop-style twins of the functions in ``_vectorized``.

Every polygon argument is a pair of contiguous float64 coordinate arrays in
counterclockwise order. Lines are passed as ``(c, s, t)`` with
``c = cos(theta)``, ``s = sin(theta)``; the minus side of a line is
``-x*s + y*c <= t``.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def cut_area(xs, ys, c, s, t):
    n = xs.shape[0]
    twice = 0.0
    have_first = False
    fx = fy = px = py = 0.0
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        di = -xs[i] * s + ys[i] * c - t
        dj = -xs[j] * s + ys[j] * c - t
        if di <= 0.0:
            if have_first:
                twice += px * ys[i] - py * xs[i]
            else:
                fx, fy = xs[i], ys[i]
                have_first = True
            px, py = xs[i], ys[i]
        if (di <= 0.0) != (dj <= 0.0):
            r = di / (di - dj)
            qx = xs[i] + r * (xs[j] - xs[i])
            qy = ys[i] + r * (ys[j] - ys[i])
            if have_first:
                twice += px * qy - py * qx
            else:
                fx, fy = qx, qy
                have_first = True
            px, py = qx, qy
    if not have_first:
        return 0.0
    twice += px * fy - py * fx
    return 0.5 * twice


@njit(cache=True)
def cut_areas(xs, ys, c, s, t):
    out = np.empty(c.shape[0])
    for k in range(c.shape[0]):
        out[k] = cut_area(xs, ys, c[k], s[k], t[k])
    return out


@njit(cache=True)
def section_offset(xs, ys, area, c, s, alpha, maxiter):
    lo = np.inf
    hi = -np.inf
    for i in range(xs.shape[0]):
        p = -xs[i] * s + ys[i] * c
        if p < lo:
            lo = p
        if p > hi:
            hi = p
    target = alpha * area
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if cut_area(xs, ys, c, s, mid) < target:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    return t, abs(cut_area(xs, ys, c, s, t) / area - alpha)


@njit(cache=True)
def section_profile(xs, ys, area, oxs, oys, oarea, alpha, thetas, maxiter):
    m = thetas.shape[0]
    ts = np.empty(m)
    fracs = np.empty(m)
    resid = np.empty(m)
    for k in range(m):
        c = np.cos(thetas[k])
        s = np.sin(thetas[k])
        t, r = section_offset(xs, ys, area, c, s, alpha, maxiter)
        ts[k] = t
        resid[k] = r
        f = cut_area(oxs, oys, c, s, t) / oarea
        fracs[k] = min(max(f, 0.0), 1.0)
    return ts, fracs, resid


@njit(cache=True)
def arc_cap_area(xs, ys, cum, s0, delta):
    """Area between the chord and the counterclockwise boundary arc.

    ``cum`` holds cumulative edge lengths (``cum[0] == 0``, ``cum[n]`` is the
    perimeter); the arc runs from arc-length position ``s0`` forward by
    ``delta``.
    """
    n = xs.shape[0]
    per = cum[n]
    s0 = s0 % per
    e0 = np.searchsorted(cum, s0, side="right") - 1
    if e0 >= n:
        e0 = n - 1
    j = e0 + 1 if e0 + 1 < n else 0
    f = (s0 - cum[e0]) / (cum[e0 + 1] - cum[e0])
    ax = xs[e0] + f * (xs[j] - xs[e0])
    ay = ys[e0] + f * (ys[j] - ys[e0])
    s1 = s0 + delta
    twice = 0.0
    px, py = ax, ay
    start = cum[e0]
    e1 = e0
    # walk the vertices strictly inside the arc
    k = e0 + 1
    lap = 0.0
    while True:
        if k >= n:
            k -= n
            lap += per
        pos = cum[k] + lap
        if pos >= s1:
            break
        twice += px * ys[k] - py * xs[k]
        px, py = xs[k], ys[k]
        start = pos
        e1 = k
        k += 1
    j1 = e1 + 1 if e1 + 1 < n else 0
    f1 = (s1 - start) / (cum[e1 + 1] - cum[e1])
    if f1 > 1.0:
        f1 = 1.0
    bx = xs[e1] + f1 * (xs[j1] - xs[e1])
    by = ys[e1] + f1 * (ys[j1] - ys[e1])
    twice += px * by - py * bx
    twice += bx * ay - by * ax
    return 0.5 * twice

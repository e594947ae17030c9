"""Pure-numpy kernels, vectorized over lines instead of looping.

Same signatures and conventions as ``_loops``. Used when numba is missing or
disabled through ``PIZZACUT_DISABLE_NUMBA``.
"""
import numpy as np


def cut_areas(xs, ys, c, s, t):
    c = np.atleast_1d(np.asarray(c, dtype=float))
    s = np.atleast_1d(np.asarray(s, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    xn = np.roll(xs, -1)
    yn = np.roll(ys, -1)
    d = -xs[None, :] * s[:, None] + ys[None, :] * c[:, None] - t[:, None]
    dn = np.roll(d, -1, axis=1)
    inside = d <= 0.0
    inside_n = dn <= 0.0
    exiting = inside & ~inside_n
    entering = ~inside & inside_n
    crossing = exiting | entering
    denom = np.where(crossing, d - dn, 1.0)
    r = np.where(crossing, d / denom, 0.0)
    qx = xs + r * (xn - xs)
    qy = ys + r * (yn - ys)

    both = inside & inside_n
    twice = np.where(both, xs * yn - ys * xn, 0.0)
    twice += np.where(exiting, xs * qy - ys * qx, 0.0)
    twice += np.where(entering, qx * yn - qy * xn, 0.0)
    total = twice.sum(axis=1)

    # closing chord from the exit point back to the entry point
    has_chord = exiting.any(axis=1) & entering.any(axis=1)
    ex = np.where(exiting, qx, 0.0).sum(axis=1)
    ey = np.where(exiting, qy, 0.0).sum(axis=1)
    nx = np.where(entering, qx, 0.0).sum(axis=1)
    ny = np.where(entering, qy, 0.0).sum(axis=1)
    total += np.where(has_chord, ex * ny - ey * nx, 0.0)
    return 0.5 * total


def cut_area(xs, ys, c, s, t):
    return float(cut_areas(xs, ys, c, s, t)[0])


def _section_offsets(xs, ys, area, c, s, alpha, maxiter):
    proj = -xs[None, :] * s[:, None] + ys[None, :] * c[:, None]
    lo = proj.min(axis=1)
    hi = proj.max(axis=1)
    target = alpha * area
    active = np.ones(lo.shape, dtype=bool)
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        active &= (mid > lo) & (mid < hi)
        if not active.any():
            break
        below = cut_areas(xs, ys, c, s, mid) < target
        lo = np.where(active & below, mid, lo)
        hi = np.where(active & ~below, mid, hi)
    t = 0.5 * (lo + hi)
    resid = np.abs(cut_areas(xs, ys, c, s, t) / area - alpha)
    return t, resid


def section_offset(xs, ys, area, c, s, alpha, maxiter):
    t, r = _section_offsets(xs, ys, area, np.array([c]), np.array([s]), alpha, maxiter)
    return float(t[0]), float(r[0])


def section_profile(xs, ys, area, oxs, oys, oarea, alpha, thetas, maxiter):
    c = np.cos(thetas)
    s = np.sin(thetas)
    ts, resid = _section_offsets(xs, ys, area, c, s, alpha, maxiter)
    fracs = np.clip(cut_areas(oxs, oys, c, s, ts) / oarea, 0.0, 1.0)
    return ts, fracs, resid


def arc_cap_area(xs, ys, cum, s0, delta):
    n = xs.shape[0]
    per = cum[n]
    s0 = s0 % per
    s1 = s0 + delta
    # vertices strictly inside the arc, over two laps of positions
    pos = np.concatenate([cum[:n], cum[:n] + per])
    idx = np.concatenate([np.arange(n), np.arange(n)])
    inner = (pos > s0) & (pos < s1)

    def point_at(sv):
        sm = sv % per
        e = min(int(np.searchsorted(cum, sm, side="right")) - 1, n - 1)
        j = (e + 1) % n
        f = (sm - cum[e]) / (cum[e + 1] - cum[e])
        return xs[e] + f * (xs[j] - xs[e]), ys[e] + f * (ys[j] - ys[e])

    ax, ay = point_at(s0)
    bx, by = point_at(s1)
    px = np.concatenate([[ax], xs[idx[inner]], [bx]])
    py = np.concatenate([[ay], ys[idx[inner]], [by]])
    return 0.5 * float(np.sum(px * np.roll(py, -1) - py * np.roll(px, -1)))

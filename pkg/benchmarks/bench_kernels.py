#!/usr/bin/env python3
"""Compare the numba kernels against their numpy twins.

Both backends are imported directly, so this does not depend on
PIZZACUT_DISABLE_NUMBA. Each row reports the best of ``--repeat`` timings
after one warm-up call (which also triggers numba compilation).

Usage:
  python benchmarks/bench_kernels.py [--vertices 512] [--thetas 1024] [--repeat 5]
"""
import argparse
import math
import time

import numpy as np

from pizzacut import _vectorized
from pizzacut.chain import Boundary
from pizzacut.geom import regular_polygon

try:
    from pizzacut import _loops
except ImportError:
    _loops = None


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(m, n_theta):
    outer = regular_polygon(m, 2.0)
    inner = regular_polygon(m, 1.0, center=(0.2, -0.1))
    rng = np.random.default_rng(0)
    th = 2 * math.pi * np.arange(n_theta) / n_theta
    c, s = np.cos(th), np.sin(th)
    t = rng.uniform(-1.5, 1.5, n_theta)
    b = Boundary(outer)
    starts = rng.uniform(0, b.perimeter, 256)
    spans = rng.uniform(0, b.perimeter, 256)

    def cut_areas(mod):
        return lambda: mod.cut_areas(outer._lx, outer._ly, c, s, t)

    def profile(mod):
        return lambda: mod.section_profile(outer._lx, outer._ly, outer.area,
                                           inner._lx, inner._ly, inner.area, 0.3, th, 80)

    def arc_caps(mod):
        def run():
            for s0, d in zip(starts, spans):
                mod.arc_cap_area(outer._lx, outer._ly, b.cum, s0, d)
        return run

    return [("cut_areas", cut_areas), ("section_profile", profile),
            ("arc_cap_area x256", arc_caps)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=512)
    ap.add_argument("--thetas", type=int, default=1024)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"m={args.vertices} vertices, {args.thetas} directions, best of {args.repeat}")
    print(f"{'kernel':<20}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}")
    for name, make in cases(args.vertices, args.thetas):
        t_np = best_of(make(_vectorized), args.repeat)
        if _loops is None:
            print(f"{name:<20}{t_np * 1e3:>12.2f}{'n/a':>12}{'':>10}")
            continue
        t_nb = best_of(make(_loops), args.repeat)
        print(f"{name:<20}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()

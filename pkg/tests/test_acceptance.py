"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines; they are
also emitted with output capture disabled so ``pytest -v`` shows them.
"""
import json
import math
import time
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from scipy.optimize import brentq

from pizzacut.chain import build_chain
from pizzacut.cli import main
from pizzacut.generate import (disk_pair, generate, offset_square, random_convex,
                               square_pair)
from pizzacut.geom import MINUS, PLUS, OrientedLine, alpha_section, clip, regular_polygon
from pizzacut.partition import check_disk_deficiency, fair_partition, verify_partition
from pizzacut.sections import (find_corollary_section, find_simultaneous_section, measure)

EPS_THM = 1e-6
EPS_FAIR = 1e-6
ALPHAS = [round(0.05 * k, 2) for k in range(1, 10)]


@pytest.fixture
def verdict(capsys):
    def emit(label, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def hundred():
    return [generate("random_pair", seed=s).to_pizza() for s in range(100)]


def cap_fraction(d, r):
    x = d / r
    return (math.acos(x) - x * math.sqrt(1 - x * x)) / math.pi


def test_c1_simultaneous_sections(hundred, verdict):
    start = time.perf_counter()
    worst = min(find_simultaneous_section(pz, a).beta - a for pz in hundred for a in ALPHAS)
    elapsed = time.perf_counter() - start
    verdict("C1 simultaneous-section battery", worst >= -EPS_THM and elapsed < 60,
            f"min(beta - alpha) = {worst:.3e} over 900 cases in {elapsed:.1f} s")


def test_c2_dough_sections(hundred, verdict):
    start = time.perf_counter()
    worst = max(find_corollary_section(pz, a).beta - a for pz in hundred for a in ALPHAS)
    elapsed = time.perf_counter() - start
    verdict("C2 dough-section battery", worst <= EPS_THM and elapsed < 60,
            f"max(beta - alpha) = {worst:.3e} over 900 cases in {elapsed:.1f} s")


def test_c3_fair_partitions(verdict):
    rng = np.random.default_rng(2024)
    from pizzacut.generate import random_pair
    fixtures = [disk_pair(1.0, 2.0, 512), square_pair(1.0, 2.0), offset_square()]
    fixtures += [random_pair(rng) for _ in range(50)]
    start = time.perf_counter()
    worst, failures = 0.0, 0
    for pz in fixtures:
        for n in (2, 4, 6, 8, 10, 12):
            rep = verify_partition(pz, fair_partition(pz, n), EPS_FAIR)
            worst = max(worst, rep.max_deviation)
            failures += not (rep.fair and rep.n == n)
    elapsed = time.perf_counter() - start
    verdict("C3 fair partitions", failures == 0 and worst <= EPS_FAIR and elapsed < 300,
            f"{len(fixtures) * 6} partitions, max relative deviation {worst:.3e}, "
            f"{failures} unfair, {elapsed:.1f} s")


def test_c4_disk_witness(verdict):
    rep = check_disk_deficiency(1.0, 2.0, 512, (1 / 3, 1 / 5, 2 / 5), strict=False)
    pz = disk_pair(1.0, 2.0, 512)
    d = brentq(lambda d: cap_fraction(d, 2.0) - 0.25, 0.0, 2.0)
    oracle = cap_fraction(d, 1.0)
    _, computed, _ = measure(pz, 0.25, 0.0, "dough")
    ok = rep.holds and min(rep.min_slack) > 0 and abs(computed - oracle) <= 1e-4
    verdict("C4 disk witness", ok,
            f"min slack per beta {[f'{s:.4f}' for s in rep.min_slack]} "
            f"(margin {rep.margin:.1e}); beta=1/4 topping fraction {computed:.6f} "
            f"vs analytic {oracle:.6f}")


def test_c5_chain_invariants(verdict):
    rng = np.random.default_rng(5)
    bodies = [random_convex(rng, points=15) for _ in range(10)]
    bad, cases = [], 0
    for i, A in enumerate(bodies):
        for alpha in (0.1, 0.2, 0.3):
            for n in (10, 25, 50):
                rep = build_chain(A, alpha, n)
                k = rep.k
                kb = rep.covering_samples["boundary"]["K"]
                ki = rep.covering_samples["interior"]["K"]
                checks = (kb.min() >= k and kb.max() <= k + 1, ki.max() <= k + 1,
                          rep.cap_area_sum <= (k + 1 + 1e-6) * A.area,
                          n * alpha <= k + 1 + 1e-3)
                cases += 1
                if not all(checks):
                    bad.append((i, alpha, n, checks))
    verdict("C5 chain invariants", not bad,
            f"{cases} chains, {len(bad)} violating" + (f": {bad[:3]}" if bad else ""))


def test_c6_disk_chain_closure(verdict):
    disk = regular_polygon(512, 1.0)
    alpha = (math.pi / 6 - math.sin(math.pi / 6) * math.cos(math.pi / 6)) / math.pi
    rep = build_chain(disk, alpha, 6)
    # independent oracle: six 60 degree steps return to the start
    x0 = np.array(rep.points[0].point)
    rot = np.array([[0.5, -math.sqrt(3) / 2], [math.sqrt(3) / 2, 0.5]])
    step_err = max(np.linalg.norm(np.array(b.point) - rot @ np.array(a.point))
                   for a, b in zip(rep.points[:-1], rep.points[1:]))
    closure = float(np.linalg.norm(np.array(rep.points[-1].point) - x0))
    verdict("C6 disk chain closure", closure <= 1e-3 * disk.diameter,
            f"|x6 - x0| = {closure:.3e} (limit {1e-3 * disk.diameter:.1e}); "
            f"worst step vs 60 degree rotation {step_err:.3e}")


def test_c7_geometry_oracles(verdict):
    rng = np.random.default_rng(77)
    worst_add = 0.0
    for _ in range(1000):
        P = random_convex(rng)
        ln = OrientedLine(rng.uniform(0, 2 * math.pi), rng.uniform(-0.4, 0.4))
        total = sum(p.area for p in (clip(P, ln, PLUS), clip(P, ln, MINUS)) if p is not None)
        worst_add = max(worst_add, abs(total - P.area) / P.area)
    worst_mc = 0.0
    for _ in range(20):
        P = random_convex(rng)
        alpha = rng.uniform(0.05, 0.95)
        ln = alpha_section(P, alpha, rng.uniform(0, 2 * math.pi))
        lo, hi = P.vertices.min(axis=0), P.vertices.max(axis=0)
        pts = lo + rng.random((1_000_000, 2)) * (hi - lo)
        pts = pts[P.distance_outside(pts) <= 0]
        c, s = ln.cs
        mc = float(np.mean(-pts[:, 0] * s + pts[:, 1] * c <= ln.t))
        worst_mc = max(worst_mc, abs(mc - alpha))
    verdict("C7 geometry oracles", worst_add <= 1e-9 and worst_mc <= 3e-3,
            f"clip additivity worst {worst_add:.2e} (1000 pairs); "
            f"Monte Carlo worst {worst_mc:.2e} (20 pairs, 1e6 samples)")


def test_c8_cli_contract(tmp_path, verdict):
    main(["generate", "random_pair", "--seed", "9", "--output-dir", str(tmp_path)])
    src = str(tmp_path / "random_pair.json")
    odd = main(["partition", "--input", src, "--n", "5", "--output-dir", str(tmp_path / "odd")])
    runs = []
    for name in ("a", "b"):
        out = tmp_path / name
        main(["generate", "random_pair", "--seed", "9", "--output-dir", str(out)])
        main(["partition", "--input", str(out / "random_pair.json"), "--n", "6", "--svg",
              "--output-dir", str(out)])
        main(["chain", "--input", str(out / "random_pair.json"), "--alpha", "0.2", "--n",
              "12", "--svg", "--output-dir", str(out)])
        runs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    same = runs[0] == runs[1] and len(runs[0]) == 6
    parsed = 0
    for name in ("partition.svg", "chain.svg"):
        ET.fromstring(runs[0][name])
        parsed += 1
    fair = json.loads(runs[0]["report.json"])["fair"]
    verdict("C8 CLI contract", odd == 3 and same and parsed == 2 and fair,
            f"odd n exit {odd}; {len(runs[0])} files identical across runs: {same}; "
            f"{parsed} SVG files parsed as XML")

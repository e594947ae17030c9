"""Pizza fixtures: concentric disks and squares, off-centre squares, random pairs."""
from __future__ import annotations

import numpy as np

from .documents import PizzaDocument
from .errors import GeometryError
from .geom import ConvexPolygon, Pizza, rectangle, regular_polygon

KINDS = ("disk_pair", "square_pair", "offset_square", "random_pair")


class InvalidParams(GeometryError):
    kind = "invalid_params"


def disk_pair(r=1.0, R=2.0, m=512) -> Pizza:
    if not 0 < r <= R:
        raise InvalidParams(f"disk_pair needs 0 < r <= R, got r={r}, R={R}")
    if m < 3:
        raise InvalidParams("disk_pair needs m >= 3")
    return Pizza(regular_polygon(m, r), regular_polygon(m, R))


def square_pair(a=1.0, b=2.0) -> Pizza:
    """Topping of side ``a`` centred in the dough ``[0, b]^2``."""
    if not 0 < a <= b:
        raise InvalidParams(f"square_pair needs 0 < a <= b, got a={a}, b={b}")
    lo, hi = (b - a) / 2, (b + a) / 2
    return Pizza(rectangle(lo, lo, hi, hi), rectangle(0, 0, b, b))


def offset_square(a=0.8, b=2.0, x=0.1, y=1.0) -> Pizza:
    """Topping ``[x, x+a] x [y, y+a]`` inside the dough ``[0, b]^2``."""
    if not (0 < a and 0 <= x and 0 <= y and x + a <= b and y + a <= b):
        raise InvalidParams(f"offset_square: [{x}, {x + a}] x [{y}, {y + a}] "
                            f"does not fit in [0, {b}]^2")
    return Pizza(rectangle(x, y, x + a, y + a), rectangle(0, 0, b, b))


def random_convex(rng: np.random.Generator, points: int = 12, min_vertices: int = 6,
                  max_tries: int = 1000) -> ConvexPolygon:
    """Hull of uniform points in the unit square, redrawn until it has enough vertices."""
    for _ in range(max_tries):
        P = ConvexPolygon.from_points(rng.random((points, 2)))
        if len(P) >= min_vertices:
            return P
    raise InvalidParams(f"no hull with {min_vertices} vertices from {points} points")


def random_pair(rng: np.random.Generator, points: int = 12) -> Pizza:
    """Random dough, and a topping shrunk towards a random interior point."""
    B = random_convex(rng, points)
    lo, hi = B.vertices.min(axis=0), B.vertices.max(axis=0)

    def inside(k):
        out = []
        while len(out) < k:
            p = lo + rng.random((4 * k, 2)) * (hi - lo)
            out.extend(p[B.distance_outside(p) < 0])
        return np.array(out[:k])

    center = inside(1)[0]
    while True:
        cloud = inside(int(rng.integers(4, 12)))
        scale = rng.uniform(0.25, 0.95)
        try:
            A = ConvexPolygon.from_points(center + scale * (cloud - center))
        except (GeometryError, ValueError, RuntimeError):
            continue
        if A.area > 0.02 * B.area:
            return Pizza(A, B)


def generate(kind: str, seed: int = 0, **params) -> PizzaDocument:
    params = {k: v for k, v in params.items() if v is not None}
    try:
        if kind == "disk_pair":
            pz = disk_pair(**params)
        elif kind == "square_pair":
            pz = square_pair(**params)
        elif kind == "offset_square":
            pz = offset_square(**params)
        elif kind == "random_pair":
            pz = random_pair(np.random.default_rng(seed), **params)
        else:
            raise InvalidParams(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    except TypeError as exc:
        raise InvalidParams(f"{kind}: {exc}") from None
    meta = {"name": kind, "generator": {k: params[k] for k in sorted(params)}}
    if kind == "random_pair":
        meta["seed"] = seed
    return PizzaDocument.from_pizza(pz, **meta)

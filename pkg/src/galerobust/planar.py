"""Exact primitives for integer vectors in the plane.

Everything here works on plain ``(int, int)`` tuples with unbounded
Python integers; no floating point is used anywhere, so angular
comparisons and hull constructions are exact.
"""

from __future__ import annotations

import functools
from math import gcd
from typing import Iterable, Sequence

Vec2 = tuple[int, int]


def cross(u: Sequence[int], v: Sequence[int]) -> int:
    """2D cross product u1*v2 - u2*v1."""
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> Vec2:
    """Scale a nonzero integer vector so its entries are coprime."""
    x, y = v
    if x == 0 and y == 0:
        raise ValueError("zero vector has no primitive representative")
    g = gcd(abs(x), abs(y))
    return (x // g, y // g)


def is_primitive(v: Sequence[int]) -> bool:
    return gcd(abs(v[0]), abs(v[1])) == 1


def sign_canonical(v: Sequence[int]) -> Vec2:
    """One representative per +/- pair: first nonzero coordinate positive."""
    x, y = v
    if x < 0 or (x == 0 and y < 0):
        return (-x, -y)
    return (x, y)


def _half(v: Sequence[int]) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2*pi).
    x, y = v
    if y > 0 or (y == 0 and x > 0):
        return 0
    return 1


def angle_cmp(u: Sequence[int], v: Sequence[int]) -> int:
    """Compare two nonzero vectors by angle in [0, 2*pi), exactly."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = cross(u, v)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def ccw_sorted(vectors: Iterable[Sequence[int]]) -> list[Vec2]:
    """Sort nonzero vectors counterclockwise starting at the smallest angle."""
    return sorted((tuple(v) for v in vectors), key=functools.cmp_to_key(angle_cmp))


def convex_hull(points: Iterable[Sequence[int]]) -> list[Vec2]:
    """Vertices of the convex hull in counterclockwise order.

    Uses the monotone chain with exact integer arithmetic.  Collinear
    boundary points are dropped, so the result is the vertex set.
    Degenerate inputs return fewer than 3 points (a point or a segment).
    """
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if len(pts) <= 2:
        return pts

    def half_chain(seq: list[Vec2]) -> list[Vec2]:
        chain: list[Vec2] = []
        for p in seq:
            while len(chain) >= 2 and cross(
                (chain[-1][0] - chain[-2][0], chain[-1][1] - chain[-2][1]),
                (p[0] - chain[-1][0], p[1] - chain[-1][1]),
            ) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half_chain(pts)
    upper = half_chain(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) <= 2:
        # All points collinear after pruning.
        return [pts[0], pts[-1]]
    return hull


def segment_lattice_points(u: Vec2, w: Vec2) -> list[Vec2]:
    """All lattice points on the closed segment [u, w], endpoints included."""
    dx, dy = w[0] - u[0], w[1] - u[1]
    if dx == 0 and dy == 0:
        return [u]
    g = gcd(abs(dx), abs(dy))
    sx, sy = dx // g, dy // g
    return [(u[0] + k * sx, u[1] + k * sy) for k in range(g + 1)]

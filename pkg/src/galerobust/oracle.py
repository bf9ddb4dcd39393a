"""Brute-force verifiers, independent of the fan pipeline.

Everything here works straight from the definitions: fibers are
enumerated as lattice points of an explicit polygon, indispensability is
read off the fiber, and primitive binomials are found by scanning a box
of kernel vectors for divisibility-minimal elements.  None of it touches
the Hilbert-basis code paths, which is the point: agreement between the
two routes is the strongest correctness check the package has.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import _speed
from .errors import GradingError, ShellWarning
from .gale import GaleConfiguration, is_positively_graded
from .planar import cross
from .toric import Binomial

#: Width of the safety margin checked at the edge of the scan box.
SHELL_WIDTH = 2


@dataclass(frozen=True)
class FiberEnumeration:
    """All nonnegative vectors sharing the image A @ target."""

    target: tuple[int, ...]
    points: frozenset[tuple[int, ...]]


def _polygon_vertices(b: GaleConfiguration, v):
    """Vertices of {x in R^2 : B x <= v}, exact rational coordinates."""
    rows = b.rows
    n = len(rows)
    verts = []
    for i in range(n):
        for j in range(i + 1, n):
            d = cross(rows[i], rows[j])
            if d == 0:
                continue
            # Solve rows[i] . x = v[i], rows[j] . x = v[j] by Cramer.
            x = Fraction(v[i] * rows[j][1] - v[j] * rows[i][1], d)
            y = Fraction(rows[i][0] * v[j] - rows[j][0] * v[i], d)
            if all(rows[k][0] * x + rows[k][1] * y <= v[k] for k in range(n)):
                verts.append((x, y))
    return verts


def enumerate_fiber(b: GaleConfiguration, v) -> FiberEnumeration:
    """Fiber of a nonnegative vector v, via the kernel parametrization.

    Every fiber element is v - B alpha for a unique integer alpha with
    B alpha <= v componentwise, so the fiber is the image of the lattice
    points of that polygon.  Raises GradingError when the polygon is
    unbounded (the configuration is not positively graded).
    """
    vt = tuple(int(x) for x in v)
    if len(vt) != b.n:
        raise ValueError("target length does not match configuration size")
    if any(x < 0 for x in vt):
        raise ValueError("target must be nonnegative")
    if not is_positively_graded(b):
        raise GradingError("fiber polygon is unbounded for ungraded configurations")

    verts = _polygon_vertices(b, vt)
    # alpha = 0 is always feasible, so a bounded polygon has vertices.
    lo_x = min(x for x, _ in verts)
    hi_x = max(x for x, _ in verts)
    lo_y = min(y for _, y in verts)
    hi_y = max(y for _, y in verts)

    def ceil_frac(f: Fraction) -> int:
        return -((-f.numerator) // f.denominator)

    def floor_frac(f: Fraction) -> int:
        return f.numerator // f.denominator

    points = set()
    for a1 in range(ceil_frac(lo_x), floor_frac(hi_x) + 1):
        for a2 in range(ceil_frac(lo_y), floor_frac(hi_y) + 1):
            if all(r[0] * a1 + r[1] * a2 <= t for r, t in zip(b.rows, vt)):
                w = tuple(t - (r[0] * a1 + r[1] * a2) for r, t in zip(b.rows, vt))
                points.add(w)
    return FiberEnumeration(target=vt, points=frozenset(points))


def is_indispensable_oracle(b: GaleConfiguration, binomial) -> bool:
    """Definition check: fiber of the plus part is exactly {plus, minus}.

    Accepts a Binomial or a raw (plus, minus) pair; raw pairs with
    overlapping supports are legal input and simply return False.  The
    difference plus - minus must be a kernel vector of the configuration.
    """
    if isinstance(binomial, Binomial):
        plus, minus = binomial.plus, binomial.minus
    else:
        plus, minus = tuple(binomial[0]), tuple(binomial[1])
    if any(p > 0 and m > 0 for p, m in zip(plus, minus)):
        return False
    diff = tuple(p - m for p, m in zip(plus, minus))
    if _solve_in_kernel(b, diff) is None:
        raise ValueError("plus - minus is not a kernel vector of the configuration")
    fiber = enumerate_fiber(b, plus)
    return fiber.points == {plus, minus}


def _solve_in_kernel(b: GaleConfiguration, z):
    """Integer u with B u = z, or None."""
    rows = b.rows
    pivot = None
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if cross(rows[i], rows[j]) != 0:
                pivot = (i, j)
                break
        if pivot:
            break
    if pivot is None:
        return None
    i, j = pivot
    d = cross(rows[i], rows[j])
    u1 = z[i] * rows[j][1] - z[j] * rows[i][1]
    u2 = rows[i][0] * z[j] - rows[j][0] * z[i]
    if u1 % d or u2 % d:
        return None
    u = (u1 // d, u2 // d)
    if any(r[0] * u[0] + r[1] * u[1] != zz for r, zz in zip(rows, z)):
        return None
    return u


def graver_bruteforce(b: GaleConfiguration, radius: int) -> frozenset[Binomial]:
    """Primitive binomials found by exhaustive search over a kernel box.

    Scans every u in [-radius, radius]^2 \\ {0} and keeps B u when no
    other box element divides it part-wise.  The caller chooses a radius
    covering all candidate generators (the fan parallelepiped bound plus
    SHELL_WIDTH); if any surviving element touches the outer shell a
    ShellWarning is emitted because the box was probably too small.
    """
    if radius < 1:
        raise ValueError("radius must be positive")
    kept = _speed.graver_box_scan(list(b.rows), radius)
    if any(max(abs(u1), abs(u2)) > radius - SHELL_WIDTH for u1, u2 in kept):
        warnings.warn(
            ShellWarning(
                f"a primitive element touches the outer shell of the radius-{radius} "
                "box; rerun with a larger radius"
            )
        )
    out = set()
    for u1, u2 in kept:
        out.add(Binomial.from_vector(b.kernel_vector((u1, u2))))
    return frozenset(out)

"""Hilbert bases of rational cones in the plane and their fan unions.

A pointed 2D cone spanned by primitive a, b (counterclockwise, angle
strictly below pi) has a unique minimal generating set of its lattice
monoid.  Every generator lies in the parallelepiped conv{0, a, b, a+b},
which makes exhaustive enumeration exact and cheap; an independent
geometric construction via hull points visible from the origin is also
provided for cross-checking.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import _speed, planar
from .errors import GradingError
from .gale import ReducedGaleConfiguration
from .planar import Vec2, cross


@dataclass(frozen=True)
class Cone2D:
    """Pointed cone spanned by two primitive generators, a before b."""

    a: Vec2
    b: Vec2

    def __post_init__(self):
        object.__setattr__(self, "a", (int(self.a[0]), int(self.a[1])))
        object.__setattr__(self, "b", (int(self.b[0]), int(self.b[1])))
        if not planar.is_primitive(self.a) or not planar.is_primitive(self.b):
            raise ValueError("cone generators must be primitive")
        if cross(self.a, self.b) <= 0:
            raise ValueError("generators must be counterclockwise with angle < pi")

    @property
    def det(self) -> int:
        return cross(self.a, self.b)

    def contains(self, p: Vec2) -> bool:
        return cross(self.a, p) >= 0 and cross(p, self.b) >= 0


@dataclass(frozen=True)
class HilbertBasisSet:
    """Union of the Hilbert bases of a fan, with per-vector provenance."""

    vectors: tuple[Vec2, ...]
    provenance: tuple[tuple[Vec2, tuple[int, ...]], ...]
    cones: tuple[Cone2D, ...]

    def cones_of(self, v: Vec2) -> tuple[int, ...]:
        for vec, idx in self.provenance:
            if vec == v:
                return idx
        raise KeyError(v)


def _ccw_in_cone(vectors):
    # Inside one pointed cone the angular span is < pi, so the plain cross
    # product is a strict total order.
    return sorted(
        vectors,
        key=functools.cmp_to_key(lambda p, q: -1 if cross(p, q) > 0 else 1),
    )


def hilbert_basis(cone: Cone2D) -> tuple[Vec2, ...]:
    """Minimal generating set of cone ∩ Z², counterclockwise.

    A lattice point is kept iff it is not the sum of two nonzero lattice
    points of the cone.  The scan is exhaustive over the parallelepiped
    conv{0, a, b, a+b}, which contains every irreducible element.  Always
    contains both generators; equals {a, b} exactly when det(a, b) = 1.
    """
    pts = _speed.hilbert_scan(cone.a[0], cone.a[1], cone.b[0], cone.b[1])
    return tuple(_ccw_in_cone(pts))


def _cone_parallelepiped_points(cone: Cone2D) -> list[Vec2]:
    """Nonzero lattice points of the cone inside conv{0, a, b, a+b}.

    Row-wise interval scan: for each x the two cross-product constraints
    are linear in y, so the admissible y form an interval computed with
    exact ceil/floor divisions.
    """
    ax, ay = cone.a
    bx, by = cone.b
    det = cone.det
    xs = (0, ax, bx, ax + bx)
    ys = (0, ay, by, ay + by)
    pts: list[Vec2] = []
    for x in range(min(xs), max(xs) + 1):
        # 0 <= ax*y - ay*x <= det  and  0 <= x*by - y*bx <= det, i.e. two
        # constraints of the form coef*y in [base, base + det].
        bounds_lo: list[int] = []
        bounds_hi: list[int] = []
        feasible = True
        for coef, base in ((ax, ay * x), (-bx, -x * by)):
            if coef > 0:
                bounds_lo.append(-(-base // coef))          # ceil(base/coef)
                bounds_hi.append((base + det) // coef)      # floor
            elif coef < 0:
                bounds_lo.append(-(-(base + det) // coef))
                bounds_hi.append(base // coef)
            elif not (base <= 0 <= base + det):
                feasible = False
        if not feasible:
            continue
        lo = max(bounds_lo) if bounds_lo else min(ys)
        hi = min(bounds_hi) if bounds_hi else max(ys)
        for y in range(lo, hi + 1):
            if x == 0 and y == 0:
                continue
            c1 = ax * y - ay * x
            c2 = x * by - y * bx
            if 0 <= c1 <= det and 0 <= c2 <= det:
                pts.append((x, y))
    return pts


def hilbert_basis_visible(cone: Cone2D) -> tuple[Vec2, ...]:
    """Hilbert basis via the hull boundary visible from the origin.

    Independent of the irreducibility filter: take the convex hull of the
    nonzero cone lattice points in the bounding parallelepiped, keep the
    hull edges whose supporting line strictly separates the polygon from
    the origin, and collect all lattice points on those edges.
    """
    pts = _cone_parallelepiped_points(cone)
    hull = planar.convex_hull(pts)
    out: set[Vec2] = set()
    k = len(hull)
    for i in range(k):
        u = hull[i]
        w = hull[(i + 1) % k]
        # CCW hull: interior is to the left of u->w; the origin must lie
        # strictly to the right for the edge to face it.
        if cross((w[0] - u[0], w[1] - u[1]), (-u[0], -u[1])) < 0:
            out.update(planar.segment_lattice_points(u, w))
    return tuple(_ccw_in_cone(out))


def _fan_union_of_directions(dirs: tuple[Vec2, ...]) -> HilbertBasisSet:
    if len(dirs) < 3:
        raise GradingError(
            f"only {len(dirs)} distinct directions; the fan cannot cover the plane"
        )
    cones = []
    for i, d in enumerate(dirs):
        nxt = dirs[(i + 1) % len(dirs)]
        if cross(d, nxt) <= 0:
            raise GradingError(
                f"consecutive directions {d} and {nxt} span an angle >= pi; "
                "the configuration is not positively graded"
            )
        cones.append(Cone2D(d, nxt))
    prov: dict[Vec2, list[int]] = {}
    for idx, cone in enumerate(cones):
        for v in hilbert_basis(cone):
            prov.setdefault(v, []).append(idx)
    vectors = tuple(sorted(prov, key=functools.cmp_to_key(planar.angle_cmp)))
    return HilbertBasisSet(
        vectors=vectors,
        provenance=tuple((v, tuple(prov[v])) for v in vectors),
        cones=tuple(cones),
    )


def fan_hilbert_union(config: ReducedGaleConfiguration) -> HilbertBasisSet:
    """Union of the Hilbert bases of all consecutive cones of the fan.

    Duplicate directions are collapsed; the fan is built over the distinct
    directions in counterclockwise order, wrapping around.  Raises
    GradingError if any consecutive pair spans an angle of pi or more,
    which happens exactly when the configuration is not positively graded.
    """
    return _fan_union_of_directions(config.distinct_directions())


def symmetrized_fan_hilbert_union(config: ReducedGaleConfiguration) -> HilbertBasisSet:
    """Fan union over the centrally symmetric direction set {±rows}.

    This is the fan of the doubled (Lawrence) configuration.  Its
    refinement of the plain fan can contribute extra Hilbert vectors when
    a negated direction is not already a visible point of its containing
    cone, which is exactly what separates primitive binomials from
    indispensable ones.  The result is centrally symmetric as a set.
    """
    doubled = set()
    for v in config.rows:
        doubled.add(v)
        doubled.add((-v[0], -v[1]))
    dirs = tuple(sorted(doubled, key=functools.cmp_to_key(planar.angle_cmp)))
    return _fan_union_of_directions(dirs)


def symmetric_core(h) -> tuple[Vec2, ...]:
    """Vectors u with both u and -u in the union; centrally symmetric.

    Accepts a HilbertBasisSet or any iterable of 2D integer vectors; the
    result keeps both members of every pair, in counterclockwise order.
    """
    vectors = h.vectors if isinstance(h, HilbertBasisSet) else tuple(
        sorted({tuple(v) for v in h}, key=functools.cmp_to_key(planar.angle_cmp))
    )
    have = set(vectors)
    return tuple(v for v in vectors if (-v[0], -v[1]) in have)


def fan_radius_bound(config: ReducedGaleConfiguration) -> int:
    """Max over symmetrized fan cones of |a|_inf + |b|_inf.

    Every Hilbert basis element of a cone lies in conv{0, a, b, a+b}, so
    every primitive-binomial witness u has sup-norm at most this bound;
    brute-force verifiers add their own safety shell on top.
    """
    doubled = set()
    for v in config.rows:
        doubled.add(v)
        doubled.add((-v[0], -v[1]))
    dirs = tuple(sorted(doubled, key=functools.cmp_to_key(planar.angle_cmp)))
    if len(dirs) < 3:
        raise GradingError("fewer than 3 distinct directions")
    best = 0
    for i, d in enumerate(dirs):
        nxt = dirs[(i + 1) % len(dirs)]
        best = max(best, max(abs(d[0]), abs(d[1])) + max(abs(nxt[0]), abs(nxt[1])))
    return best

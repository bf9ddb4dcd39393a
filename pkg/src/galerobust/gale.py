"""Planar Gale configurations: construction, reduction, grading, bouquets.

A matrix with n columns and rank n-2 has a rank-2 integer kernel; the
rows of a kernel basis are the Gale vectors b_1..b_n.  Rotating each row
by 90 degrees and scaling to coprime entries gives the reduced
configuration, whose angular fan drives everything else in the package.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import gcd

from . import planar
from .errors import RankError, ZeroRowError
from .intlinalg import IntegerMatrix, kernel_lattice_basis, rank
from .planar import Vec2


@dataclass(frozen=True)
class GaleConfiguration:
    """List of 2D integer row vectors spanning the kernel lattice of A."""

    rows: tuple[Vec2, ...]
    source: IntegerMatrix | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.rows) < 3:
            raise ValueError("a Gale configuration needs at least 3 rows")
        clean = []
        for i, row in enumerate(self.rows):
            t = (int(row[0]), int(row[1]))
            if len(row) != 2:
                raise ValueError("Gale rows must be 2-dimensional")
            if t == (0, 0):
                raise ZeroRowError(
                    f"Gale row {i} is zero; variable {i} lies in no kernel vector "
                    "and must be removed before analysis"
                )
            clean.append(t)
        object.__setattr__(self, "rows", tuple(clean))

    @property
    def n(self) -> int:
        return len(self.rows)

    def kernel_vector(self, u: tuple[int, int]) -> tuple[int, ...]:
        """The kernel element B @ u of the ambient lattice Z^n."""
        return tuple(r[0] * u[0] + r[1] * u[1] for r in self.rows)


@dataclass(frozen=True)
class ReducedGaleConfiguration:
    """Primitive 90-degree rotations of the Gale rows, with angular order.

    ``rows[i]`` corresponds to variable ``index_map[i]`` (the identity
    here, since rows are kept in original order) and ``angular_order``
    lists row positions sorted counterclockwise from the smallest angle
    in [0, 2*pi), ties broken by original index.
    """

    rows: tuple[Vec2, ...]
    index_map: tuple[int, ...]
    angular_order: tuple[int, ...]

    def ordered_rows(self) -> tuple[Vec2, ...]:
        return tuple(self.rows[i] for i in self.angular_order)

    def distinct_directions(self) -> tuple[Vec2, ...]:
        """Distinct reduced directions in counterclockwise order."""
        seen: list[Vec2] = []
        for i in self.angular_order:
            v = self.rows[i]
            if not seen or seen[-1] != v:
                seen.append(v)
        return tuple(seen)


@dataclass(frozen=True)
class Bouquet:
    """Maximal set of variables whose Gale vectors span one line."""

    members: frozenset[int]
    direction: Vec2
    mixed: bool


def _lagrange_reduced_columns(k: IntegerMatrix) -> IntegerMatrix:
    """Deterministic shortest basis for a rank-2 column lattice.

    Gauss/Lagrange reduction followed by sign normalization (first
    nonzero entry positive) and lexicographic column order.  This makes
    the planar kernel basis, and hence the reduced Gale rows, a canonical
    function of the input matrix.
    """
    v = list(k.column(0))
    w = list(k.column(1))

    def norm2(x):
        return sum(t * t for t in x)

    if norm2(v) > norm2(w):
        v, w = w, v
    while True:
        n = norm2(v)
        t = sum(a * b for a, b in zip(v, w))
        # Nearest integer to t/n, half rounded up; exact integer arithmetic.
        q = (2 * t + n) // (2 * n)
        if q != 0:
            w = [a - q * b for a, b in zip(w, v)]
        if norm2(w) < norm2(v):
            v, w = w, v
        else:
            break

    def sign_fix(x):
        lead = next((t for t in x if t != 0), 0)
        return [-t for t in x] if lead < 0 else x

    v, w = sign_fix(v), sign_fix(w)
    if tuple(w) < tuple(v):
        v, w = w, v
    return IntegerMatrix([[a, b] for a, b in zip(v, w)])


def gale_transform(a: IntegerMatrix) -> GaleConfiguration:
    """Gale configuration of a matrix with corank exactly 2.

    The saturated kernel basis is normalized to the canonical shortest
    planar basis before its rows are read off, so the configuration is a
    deterministic function of A.  Raises RankError when rank(A) is not
    ncols - 2, and ZeroRowError when some variable occurs in no kernel
    vector.
    """
    n = a.ncols
    if n < 3:
        raise RankError(f"need at least 3 columns, got {n}")
    r = rank(a)
    if r != n - 2:
        raise RankError(f"rank {r} != ncols - 2 = {n - 2}; kernel is not planar")
    k = kernel_lattice_basis(a)
    k = _lagrange_reduced_columns(k)
    return GaleConfiguration(rows=tuple(k.rows), source=a)


def reduce_configuration(b: GaleConfiguration) -> ReducedGaleConfiguration:
    """Rotate each row by 90 degrees and scale entries to be coprime."""
    reduced = []
    for (x, y) in b.rows:
        g = gcd(abs(x), abs(y))
        reduced.append((-y // g, x // g))
    order = sorted(
        range(len(reduced)),
        key=functools.cmp_to_key(
            lambda i, j: planar.angle_cmp(reduced[i], reduced[j]) or (i - j)
        ),
    )
    return ReducedGaleConfiguration(
        rows=tuple(reduced),
        index_map=tuple(range(len(reduced))),
        angular_order=tuple(order),
    )


def is_positively_graded(b) -> bool:
    """Whether {alpha in Z^2 : B alpha >= 0 componentwise} = {0}.

    Exactly equivalent to the rows of B positively spanning the plane:
    after deduplicating directions, every counterclockwise gap between
    consecutive directions must be strictly less than pi.  Accepts a
    GaleConfiguration or any sequence of nonzero 2D integer rows.
    """
    rows = b.rows if isinstance(b, GaleConfiguration) else tuple(map(tuple, b))
    dirs = sorted(
        {planar.primitive(row) for row in rows},
        key=functools.cmp_to_key(planar.angle_cmp),
    )
    if len(dirs) < 2:
        return False
    for i, d in enumerate(dirs):
        nxt = dirs[(i + 1) % len(dirs)]
        if planar.cross(d, nxt) <= 0:
            return False
    return True


def bouquets(b: GaleConfiguration) -> list[Bouquet]:
    """Partition of the variables into maximal collinear classes.

    The common line of each class is reported by a sign-canonical
    primitive direction; a bouquet is mixed when its rows point along
    both rays of the line.  Bouquets are listed by smallest member.
    """
    groups: dict[Vec2, list[int]] = {}
    for i, row in enumerate(b.rows):
        d = planar.sign_canonical(planar.primitive(row))
        groups.setdefault(d, []).append(i)
    out = []
    for d, members in groups.items():
        signs = {1 if planar.dot(b.rows[i], d) > 0 else -1 for i in members}
        out.append(Bouquet(members=frozenset(members), direction=d, mixed=len(signs) == 2))
    out.sort(key=lambda bq: min(bq.members))
    return out

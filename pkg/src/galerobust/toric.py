"""Binomial-level semantics of codimension-2 toric ideals.

Binomials are exponent-vector pairs (plus, minus) with disjoint supports;
no polynomial objects are materialized.  The indispensable set, Graver
basis, Markov basis and the strong-robustness verdict are all read off
the planar fan of the reduced Gale configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from string import ascii_lowercase

from . import planar
from .errors import ConsistencyError, DegenerateError
from .gale import (
    Bouquet,
    GaleConfiguration,
    ReducedGaleConfiguration,
    bouquets,
    gale_transform,
    reduce_configuration,
)
from .hilbert import (
    HilbertBasisSet,
    fan_hilbert_union,
    symmetric_core,
    symmetrized_fan_hilbert_union,
)
from .intlinalg import IntegerMatrix
from .planar import Vec2


@dataclass(frozen=True, order=True)
class Binomial:
    """Canonical exponent-vector pair p^plus - p^minus.

    Invariants: equal lengths, nonnegative entries, disjoint supports,
    not both zero, and plus lexicographically greater than minus (one
    representative per sign pair).
    """

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise ValueError("exponent vectors differ in length")
        if any(x < 0 for x in self.plus) or any(x < 0 for x in self.minus):
            raise ValueError("exponents must be nonnegative")
        if any(p > 0 and m > 0 for p, m in zip(self.plus, self.minus)):
            raise ValueError("supports of plus and minus must be disjoint")
        if not any(self.plus) and not any(self.minus):
            raise ValueError("zero binomial")
        if self.plus <= self.minus:
            raise ValueError("not in canonical sign (plus must be lex-greater)")

    @classmethod
    def from_vector(cls, z) -> "Binomial":
        """Canonical binomial of a nonzero integer vector (sign chosen here)."""
        zt = tuple(int(x) for x in z)
        if not any(zt):
            raise ValueError("zero vector yields no binomial")
        plus = tuple(x if x > 0 else 0 for x in zt)
        minus = tuple(-x if x < 0 else 0 for x in zt)
        if plus <= minus:
            plus, minus = minus, plus
        return cls(plus=plus, minus=minus)

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(p - m for p, m in zip(self.plus, self.minus))


def variable_names(n: int, letters: bool = False) -> list[str]:
    """x1..xn, or a..z when requested and n is at most 26."""
    if letters and n <= 26:
        return list(ascii_lowercase[:n])
    return [f"x{i + 1}" for i in range(n)]


def render_binomial(b: Binomial, letters: bool = False) -> str:
    """Human-readable form such as 'a^3*e*f^2 - b*c^3*d'."""
    names = variable_names(len(b.plus), letters)

    def monomial(exps) -> str:
        parts = []
        for name, e in zip(names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    return f"{monomial(b.plus)} - {monomial(b.minus)}"


@dataclass(frozen=True)
class LawrenceMatrix:
    """Block matrix [[A, 0], [I, I]] whose kernel pairs u with -u."""

    base: IntegerMatrix
    lifted: IntegerMatrix


def lawrence_lifting(a: IntegerMatrix) -> LawrenceMatrix:
    d, n = a.nrows, a.ncols
    rows = [list(r) + [0] * n for r in a.rows]
    for i in range(n):
        ident = [0] * (2 * n)
        ident[i] = 1
        ident[n + i] = 1
        rows.append(ident)
    return LawrenceMatrix(base=a, lifted=IntegerMatrix(rows))


def binomial_from_gale(b: GaleConfiguration, u) -> Binomial:
    """Binomial of the kernel vector B u, in canonical sign."""
    ut = (int(u[0]), int(u[1]))
    if ut == (0, 0):
        raise ValueError("u must be nonzero")
    return Binomial.from_vector(b.kernel_vector(ut))


def _fan_pipeline(a: IntegerMatrix):
    b = gale_transform(a)
    reduced = reduce_configuration(b)
    union = fan_hilbert_union(reduced)
    return b, reduced, union


def indispensable_set(a: IntegerMatrix) -> frozenset[Binomial]:
    """Binomials appearing in every binomial minimal generating set.

    These correspond exactly to the symmetric core of the fan's Hilbert
    basis union: vectors u with both u and -u generated by some fan cone.
    """
    b, _, union = _fan_pipeline(a)
    core = symmetric_core(union)
    return frozenset(binomial_from_gale(b, u) for u in core)


def graver_basis(a: IntegerMatrix) -> frozenset[Binomial]:
    """All primitive binomials: no other binomial divides them part-wise.

    Computed over the symmetrized fan (directions and their negations),
    which is the fan of the doubled configuration: refining a cone at a
    non-visible negated ray can expose primitive vectors the plain fan
    misses, so the plain union alone would undercount.  Requires the same
    rank and grading preconditions as the rest of the pipeline.
    """
    b, reduced, _ = _fan_pipeline(a)
    sym_union = symmetrized_fan_hilbert_union(reduced)
    return frozenset(binomial_from_gale(b, u) for u in sym_union.vectors)


def markov_basis(a: IntegerMatrix) -> tuple[frozenset[Binomial], bool]:
    """Minimal generating set and a complete-intersection flag.

    When indispensable binomials exist they generate the ideal and are
    returned with the flag False.  Otherwise the ideal is a complete
    intersection; the two generators are not constructed and the empty
    set is returned with the flag True.
    """
    indisp = indispensable_set(a)
    return indisp, len(indisp) == 0


def centrally_symmetric_hull(config: ReducedGaleConfiguration) -> bool:
    """Whether conv of the reduced rows has a negation-invariant vertex set."""
    hull = planar.convex_hull(config.rows)
    if len(hull) < 3:
        raise DegenerateError("convex hull of the reduced rows is not 2-dimensional")
    verts = set(hull)
    return all((-v[0], -v[1]) in verts for v in verts)


@dataclass(frozen=True)
class RobustnessReport:
    """Verdict plus every certificate used to reach it."""

    strongly_robust: bool
    graver: frozenset[Binomial]
    indispensable: frozenset[Binomial]
    h_union: HilbertBasisSet
    h_core: tuple[Vec2, ...]
    bouquets: tuple[Bouquet, ...]
    mixed_count: int
    centrally_symmetric: bool
    complete_intersection: bool
    witness: Vec2 | None
    gale: GaleConfiguration = field(compare=False)
    reduced: ReducedGaleConfiguration = field(compare=False)

    def __post_init__(self):
        if not self.indispensable <= self.graver:
            raise ConsistencyError("indispensable set exceeds the Graver basis")
        if self.strongly_robust != (self.indispensable == self.graver):
            raise ConsistencyError("verdict contradicts the set comparison")


def is_strongly_robust(a: IntegerMatrix) -> RobustnessReport:
    """Decide strong robustness (indispensable set equals Graver basis).

    The verdict is computed from the geometric criterion (for every
    reduced row, its negation lies in the symmetric core) and checked
    against the direct set comparison; the two must agree on every input,
    and a ConsistencyError is raised if they ever do not.
    """
    b, reduced, union = _fan_pipeline(a)
    core = symmetric_core(union)
    core_set = set(core)

    witness = None
    for row in reduced.rows:
        if (-row[0], -row[1]) not in core_set:
            witness = row
            break
    geometric_verdict = witness is None

    indisp = frozenset(binomial_from_gale(b, u) for u in core)
    sym_union = symmetrized_fan_hilbert_union(reduced)
    graver = frozenset(binomial_from_gale(b, u) for u in sym_union.vectors)
    if geometric_verdict != (indisp == graver):
        raise ConsistencyError(
            "geometric criterion and direct Graver comparison disagree; "
            "this indicates a bug, please report the input matrix"
        )

    bqs = tuple(bouquets(b))
    return RobustnessReport(
        strongly_robust=geometric_verdict,
        graver=graver,
        indispensable=indisp,
        h_union=union,
        h_core=core,
        bouquets=bqs,
        mixed_count=sum(1 for q in bqs if q.mixed),
        centrally_symmetric=centrally_symmetric_hull(reduced),
        complete_intersection=len(core) == 0,
        witness=witness,
        gale=b,
        reduced=reduced,
    )

"""Exact integer linear algebra: rank, Hermite normal form, kernel lattices.

All arithmetic uses unbounded Python integers, so results are exact for
inputs of any magnitude; overflow cannot occur.  Matrices are immutable
value objects and safe to share between threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

IntVec = tuple[int, ...]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class IntegerMatrix:
    """Immutable dense matrix over the integers.

    Entries are validated to be plain Python ints (bools are rejected) so
    every operation stays exact.  Matrices must have at least one row;
    zero-column matrices are permitted because kernels of full-rank maps
    are legitimately trivial.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        packed = []
        width = None
        for row in rows:
            t = tuple(row)
            for x in t:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"matrix entries must be ints, got {x!r}")
            if width is None:
                width = len(t)
            elif len(t) != width:
                raise ValueError("ragged rows in matrix")
            packed.append(t)
        if not packed:
            raise ValueError("matrix needs at least one row")
        self._rows = tuple(packed)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> tuple[IntVec, ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    def row(self, i: int) -> IntVec:
        return self._rows[i]

    def column(self, j: int) -> IntVec:
        return tuple(r[j] for r in self._rows)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            [[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch: ({self.nrows}x{self.ncols}) @ ({other.nrows}x{other.ncols})"
            )
        ocols = other.ncols
        return IntegerMatrix(
            [
                [
                    sum(self._rows[i][k] * other._rows[k][j] for k in range(self.ncols))
                    for j in range(ocols)
                ]
                for i in range(self.nrows)
            ]
        )

    def apply(self, vec: Sequence[int]) -> IntVec:
        """Matrix-vector product M @ v as a tuple."""
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(r[k] * vec[k] for k in range(self.ncols)) for r in self._rows)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"IntegerMatrix([{body}])"


def hermite_normal_form(m: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular, U @ M = H, pivots positive, entries
    above each pivot reduced into [0, pivot), and zero rows last.  The
    form H is the canonical representative of the row lattice of M.
    """
    nr, nc = m.nrows, m.ncols
    h = [list(r) for r in m.rows]
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    piv = 0
    for col in range(nc):
        if piv >= nr:
            break
        sel = next((r for r in range(piv, nr) if h[r][col] != 0), None)
        if sel is None:
            continue
        if sel != piv:
            h[piv], h[sel] = h[sel], h[piv]
            u[piv], u[sel] = u[sel], u[piv]
        for r in range(piv + 1, nr):
            if h[r][col] == 0:
                continue
            a, b = h[piv][col], h[r][col]
            g, s, t = _xgcd(a, b)
            p, q = a // g, b // g
            # Unimodular 2x2 transform on rows (piv, r); det = s*p + t*q = 1.
            h[piv], h[r] = (
                [s * x + t * y for x, y in zip(h[piv], h[r])],
                [-q * x + p * y for x, y in zip(h[piv], h[r])],
            )
            u[piv], u[r] = (
                [s * x + t * y for x, y in zip(u[piv], u[r])],
                [-q * x + p * y for x, y in zip(u[piv], u[r])],
            )
        if h[piv][col] < 0:
            h[piv] = [-x for x in h[piv]]
            u[piv] = [-x for x in u[piv]]
        pv = h[piv][col]
        for r in range(piv):
            q = h[r][col] // pv
            if q != 0:
                h[r] = [x - q * y for x, y in zip(h[r], h[piv])]
                u[r] = [x - q * y for x, y in zip(u[r], u[piv])]
        piv += 1
    return IntegerMatrix(h), IntegerMatrix(u)


def rank(m: IntegerMatrix) -> int:
    """Rank over the rationals, computed exactly."""
    h, _ = hermite_normal_form(m)
    return sum(1 for row in h.rows if any(x != 0 for x in row))


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant via the Bareiss fraction-free algorithm."""
    if m.nrows != m.ncols:
        raise ValueError("determinant requires a square matrix")
    n = m.nrows
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def column_hnf(m: IntegerMatrix) -> IntegerMatrix:
    """Canonical basis of the column lattice of M, as matrix columns.

    Computed as the transpose of the row HNF of the transpose, with zero
    rows dropped.  Two matrices have equal column lattices iff their
    column_hnf forms are identical, which makes this a convenient lattice
    equality test.
    """
    h, _ = hermite_normal_form(m.transpose())
    nonzero = [row for row in h.rows if any(x != 0 for x in row)]
    if not nonzero:
        # The column lattice is trivial; encode as a single zero column.
        return IntegerMatrix([[0] for _ in range(m.nrows)])
    return IntegerMatrix(nonzero).transpose()


def kernel_lattice_basis(m: IntegerMatrix) -> IntegerMatrix:
    """Basis of the saturated integer kernel {v : M v = 0}, as columns.

    The rows of the HNF transform U that face zero rows of H form a basis
    of the full kernel lattice (not a finite-index sublattice), because U
    is unimodular.  The result is canonicalized to column-style HNF so
    equal kernels always produce identical matrices.  A full-rank input
    yields a matrix with zero columns.
    """
    h, u = hermite_normal_form(m.transpose())
    kernel_rows = [
        u.row(i)
        for i in range(h.nrows)
        if all(x == 0 for x in h.row(i))
    ]
    n = m.ncols
    if not kernel_rows:
        return IntegerMatrix([()] * n)
    canon = column_hnf(IntegerMatrix(kernel_rows).transpose())
    return canon

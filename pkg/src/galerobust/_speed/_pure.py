"""Pure-Python reference implementations of the hot scan kernels.

These are the semantics of record: the compiled variants in ``_native``
must return exactly the same sets.  Unbounded Python integers make this
path correct for inputs of any magnitude.
"""

from __future__ import annotations

from math import gcd


def hilbert_scan(ax: int, ay: int, bx: int, by: int) -> list[tuple[int, int]]:
    """Irreducible generators of cone((ax,ay),(bx,by)) ∩ Z², unsorted.

    Enumerates the lattice points of the half-open parallelepiped bound
    conv{0, a, b, a+b} that lie in the cone, then drops every point that
    splits as a sum of two nonzero cone points.  Both summands of such a
    split necessarily lie in the candidate set, so the filter is complete.
    """
    det = ax * by - ay * bx
    xs = (0, ax, bx, ax + bx)
    ys = (0, ay, by, ay + by)
    cands: list[tuple[int, int]] = []
    for px in range(min(xs), max(xs) + 1):
        for py in range(min(ys), max(ys) + 1):
            if px == 0 and py == 0:
                continue
            c1 = ax * py - ay * px
            if c1 < 0 or c1 > det:
                continue
            c2 = px * by - py * bx
            if c2 < 0 or c2 > det:
                continue
            cands.append((px, py))
    basis = []
    for (px, py) in cands:
        if gcd(abs(px), abs(py)) != 1:
            continue  # p = g*q with q in the cone, so p splits
        reducible = False
        for (qx, qy) in cands:
            rx, ry = px - qx, py - qy
            if rx == 0 and ry == 0:
                continue
            if ax * ry - ay * rx >= 0 and rx * by - ry * bx >= 0:
                reducible = True
                break
        if not reducible:
            basis.append((px, py))
    return basis


def graver_box_scan(
    rows: list[tuple[int, int]], radius: int
) -> list[tuple[int, int]]:
    """u in [-radius, radius]^2 whose kernel vector B u divides no smaller one.

    A vector z = B u is kept iff no other nonzero u' in the box yields z'
    with z'+ <= z+ and z'- <= z- componentwise.  Candidates are processed
    by increasing 1-norm of z; a vector then only needs to be tested
    against the already-accepted minimal ones, because any dominator is
    itself dominated by an accepted element of strictly smaller norm.
    """
    cands = []
    for u1 in range(-radius, radius + 1):
        for u2 in range(-radius, radius + 1):
            if u1 == 0 and u2 == 0:
                continue
            if gcd(abs(u1), abs(u2)) != 1:
                continue  # B(u/g) dominates B(u)
            norm = 0
            for (bx, by) in rows:
                norm += abs(bx * u1 + by * u2)
            cands.append((norm, u1, u2))
    cands.sort()
    accepted_vals: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    accepted_u: list[tuple[int, int]] = []
    for _, u1, u2 in cands:
        z = [bx * u1 + by * u2 for (bx, by) in rows]
        zp = tuple(x if x > 0 else 0 for x in z)
        zm = tuple(-x if x < 0 else 0 for x in z)
        dominated = False
        for gp, gm in accepted_vals:
            if all(a <= b for a, b in zip(gp, zp)) and all(
                a <= b for a, b in zip(gm, zm)
            ):
                dominated = True
                break
        if not dominated:
            accepted_vals.append((zp, zm))
            accepted_u.append((u1, u2))
    return accepted_u

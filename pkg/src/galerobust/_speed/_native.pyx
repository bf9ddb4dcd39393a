# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels.

Same contracts as ``_pure``; callers guarantee that every intermediate
fits in int64 (see the dispatch logic in the package __init__), so the
C arithmetic here cannot overflow.
"""

from libc.stdlib cimport free, malloc, qsort


cdef long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


def hilbert_scan(long long ax, long long ay, long long bx, long long by):
    """Irreducible generators of cone(a, b) ∩ Z², unsorted list of tuples."""
    cdef long long det = ax * by - ay * bx
    cdef long long lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0
    cdef long long[4] xs
    cdef long long[4] ys
    xs[0] = 0; xs[1] = ax; xs[2] = bx; xs[3] = ax + bx
    ys[0] = 0; ys[1] = ay; ys[2] = by; ys[3] = ay + by
    cdef int i
    for i in range(4):
        if xs[i] < lo_x: lo_x = xs[i]
        if xs[i] > hi_x: hi_x = xs[i]
        if ys[i] < lo_y: lo_y = ys[i]
        if ys[i] > hi_y: hi_y = ys[i]

    cdef Py_ssize_t cap = <Py_ssize_t> ((hi_x - lo_x + 1) * (hi_y - lo_y + 1))
    cdef long long* px = <long long*> malloc(cap * sizeof(long long))
    cdef long long* py = <long long*> malloc(cap * sizeof(long long))
    if px == NULL or py == NULL:
        free(px); free(py)
        raise MemoryError()

    cdef Py_ssize_t m = 0
    cdef long long x, y, c1, c2
    for x in range(lo_x, hi_x + 1):
        for y in range(lo_y, hi_y + 1):
            if x == 0 and y == 0:
                continue
            c1 = ax * y - ay * x
            if c1 < 0 or c1 > det:
                continue
            c2 = x * by - y * bx
            if c2 < 0 or c2 > det:
                continue
            px[m] = x
            py[m] = y
            m += 1

    out = []
    cdef Py_ssize_t j, k
    cdef long long rx, ry
    cdef bint reducible
    for j in range(m):
        if _gcd(px[j], py[j]) != 1:
            continue
        reducible = False
        for k in range(m):
            rx = px[j] - px[k]
            ry = py[j] - py[k]
            if rx == 0 and ry == 0:
                continue
            if ax * ry - ay * rx >= 0 and rx * by - ry * bx >= 0:
                reducible = True
                break
        if not reducible:
            out.append((px[j], py[j]))
    free(px)
    free(py)
    return out


cdef int _cmp_cand(const void* pa, const void* pb) noexcept nogil:
    cdef const long long* a = <const long long*> pa
    cdef const long long* b = <const long long*> pb
    cdef int i
    for i in range(3):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


def graver_box_scan(rows, long long radius):
    """u in the box whose kernel vector B u is divisibility-minimal."""
    cdef Py_ssize_t n = len(rows)
    cdef long long* bx = <long long*> malloc(n * sizeof(long long))
    cdef long long* by = <long long*> malloc(n * sizeof(long long))
    if bx == NULL or by == NULL:
        free(bx); free(by)
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        bx[i] = rows[i][0]
        by[i] = rows[i][1]

    cdef Py_ssize_t cap = <Py_ssize_t> (2 * radius + 1) * (2 * radius + 1)
    # Candidate records: (1-norm of B u, u1, u2), sorted by norm.
    cdef long long* cand = <long long*> malloc(3 * cap * sizeof(long long))
    if cand == NULL:
        free(bx); free(by)
        raise MemoryError()

    cdef Py_ssize_t m = 0
    cdef long long u1, u2, norm, v
    for u1 in range(-radius, radius + 1):
        for u2 in range(-radius, radius + 1):
            if u1 == 0 and u2 == 0:
                continue
            if _gcd(u1, u2) != 1:
                continue
            norm = 0
            for i in range(n):
                v = bx[i] * u1 + by[i] * u2
                norm += v if v >= 0 else -v
            cand[3 * m] = norm
            cand[3 * m + 1] = u1
            cand[3 * m + 2] = u2
            m += 1

    qsort(cand, m, 3 * sizeof(long long), _cmp_cand)

    # Accepted minimal elements, stored as interleaved (plus, minus) parts.
    cdef Py_ssize_t acc_cap = 64
    cdef Py_ssize_t acc = 0
    cdef long long* accv = <long long*> malloc(acc_cap * 2 * n * sizeof(long long))
    cdef long long* z = <long long*> malloc(2 * n * sizeof(long long))
    if accv == NULL or z == NULL:
        free(bx); free(by); free(cand); free(accv); free(z)
        raise MemoryError()

    out = []
    cdef Py_ssize_t j, g, t
    cdef bint dominated, fits
    cdef long long* newv
    for j in range(m):
        u1 = cand[3 * j + 1]
        u2 = cand[3 * j + 2]
        for i in range(n):
            v = bx[i] * u1 + by[i] * u2
            z[2 * i] = v if v > 0 else 0
            z[2 * i + 1] = -v if v < 0 else 0
        dominated = False
        for g in range(acc):
            fits = True
            for t in range(2 * n):
                if accv[g * 2 * n + t] > z[t]:
                    fits = False
                    break
            if fits:
                dominated = True
                break
        if dominated:
            continue
        if acc == acc_cap:
            acc_cap *= 2
            newv = <long long*> malloc(acc_cap * 2 * n * sizeof(long long))
            if newv == NULL:
                free(bx); free(by); free(cand); free(accv); free(z)
                raise MemoryError()
            for t in range(acc * 2 * n):
                newv[t] = accv[t]
            free(accv)
            accv = newv
        for t in range(2 * n):
            accv[acc * 2 * n + t] = z[t]
        acc += 1
        out.append((u1, u2))

    free(bx)
    free(by)
    free(cand)
    free(accv)
    free(z)
    return out

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled versions of the kernels in ``_pure.py``.

Masks are limited to 64 bits; wider input raises ``OverflowError`` and the
dispatcher in ``kernels.py`` retries with the pure-Python version.
"""
from libc.stdint cimport int64_t, uint64_t
from libcpp.algorithm cimport sort, unique
from libcpp.vector cimport vector

from mfbounds._pure import boundary_rows, scan_tables

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long)
    int ctz64 "__builtin_ctzll"(unsigned long long)

cdef enum:
    MAXW = 64

cdef int64_t ENTRY_LIMIT = 2147483647


cdef vector[uint64_t] _collect(facet_masks) except *:
    cdef vector[uint64_t] acc
    cdef uint64_t m, s
    for obj in facet_masks:
        m = obj
        s = m
        while True:
            acc.push_back(s)
            if s == 0:
                break
            s = (s - 1) & m
    sort(acc.begin(), acc.end())
    acc.erase(unique(acc.begin(), acc.end()), acc.end())
    return acc


def all_faces(facet_masks):
    cdef vector[uint64_t] acc = _collect(facet_masks)
    return [x for x in acc]


def face_counts(facet_masks):
    cdef vector[uint64_t] acc = _collect(facet_masks)
    cdef int top = 0
    cdef size_t k
    cdef int c
    for k in range(acc.size()):
        c = popcount64(acc[k])
        if c > top:
            top = c
    counts = [0] * (top + 1)
    cdef vector[int64_t] tally = vector[int64_t](top + 1, 0)
    for k in range(acc.size()):
        tally[popcount64(acc[k])] += 1
    for c in range(top + 1):
        counts[c] = tally[c]
    return counts


cdef int _rank(int64_t[:, :] m, int nrows, int ncols) except -1:
    cdef int64_t prev = 1, piv, a, v
    cdef int rank = 0, r, c, k, p
    for c in range(ncols):
        if rank == nrows:
            break
        p = -1
        for r in range(rank, nrows):
            if m[r, c] != 0:
                p = r
                break
        if p < 0:
            continue
        if p != rank:
            for k in range(ncols):
                v = m[p, k]
                m[p, k] = m[rank, k]
                m[rank, k] = v
        piv = m[rank, c]
        for r in range(rank + 1, nrows):
            a = m[r, c]
            for k in range(c + 1, ncols):
                v = (m[r, k] * piv - a * m[rank, k]) // prev
                if v > ENTRY_LIMIT or v < -ENTRY_LIMIT:
                    raise OverflowError("Bareiss entry exceeds 31 bits")
                m[r, k] = v
            m[r, c] = 0
        prev = piv
        rank += 1
    return rank


def bareiss_rank(rows):
    cdef int nrows = len(rows)
    if nrows == 0:
        return 0
    cdef int ncols = len(rows[0])
    cdef int64_t[:, :] m = _as_matrix(rows, nrows, ncols)
    return _rank(m, nrows, ncols)


cdef int64_t[:, :] _as_matrix(rows, int nrows, int ncols):
    import array
    buf = array.array("q", [0]) * (max(nrows, 1) * max(ncols, 1))
    cdef int64_t[:, :] m = memoryview(buf).cast("B").cast("q", [max(nrows, 1), max(ncols, 1)])
    cdef int r, k
    for r in range(nrows):
        row = rows[r]
        for k in range(ncols):
            m[r, k] = row[k]
    return m


def scan_complexes(int n, int d, int i, start, stop):
    if d != 1 and d != 2:
        raise ValueError("scan supports d in {1, 2}")
    tops, bd, cofaces = scan_tables(n, d)
    brows = boundary_rows(n, d)
    cdef int ntops = len(tops)
    cdef int nlows = len(brows[0])
    cdef int ncof = len(cofaces)
    if ntops > MAXW or nlows > MAXW:
        raise OverflowError("scan tables exceed 64 bits")
    if stop > (1 << ntops):
        stop = 1 << ntops
    cdef uint64_t bd_c[MAXW]
    cdef vector[uint64_t] cof_c
    cdef int64_t rows_c[MAXW][MAXW]
    cdef int k, j, nsel
    for k in range(ntops):
        bd_c[k] = bd[k]
        for j in range(nlows):
            rows_c[k][j] = brows[k][j]
    for c in cofaces:
        cof_c.push_back(c)
    cdef bint forbid_top = d > i
    cdef bint forbid_above = d + 1 > i
    cdef uint64_t s, m, closure, lo = max(start, 1), hi = stop
    cdef bint bad
    cdef size_t u
    import array
    buf = array.array("q", [0]) * (MAXW * MAXW)
    cdef int64_t[:, :] work = memoryview(buf).cast("B").cast("q", [MAXW, MAXW])
    out = []
    s = lo
    while s < hi:
        closure = 0
        m = s
        while m:
            closure |= bd_c[ctz64(m)]
            m &= m - 1
        bad = False
        if forbid_top:
            for k in range(ntops):
                if not ((s >> k) & 1) and (bd_c[k] & ~closure) == 0:
                    bad = True
                    break
        if not bad and forbid_above:
            for u in range(cof_c.size()):
                if (s & cof_c[u]) == cof_c[u]:
                    bad = True
                    break
        if not bad:
            nsel = 0
            m = s
            while m:
                k = ctz64(m)
                for j in range(nlows):
                    work[nsel, j] = rows_c[k][j]
                nsel += 1
                m &= m - 1
            if _rank(work, nsel, nlows) < nsel:
                out.append(s)
        s += 1
    return out


def scan_face_numbers(int n, int d, masks):
    if d != 1 and d != 2:
        raise ValueError("scan supports d in {1, 2}")
    tops, bd, _ = scan_tables(n, d)
    cdef int ntops = len(tops)
    if ntops > MAXW:
        raise OverflowError("scan tables exceed 64 bits")
    cdef uint64_t bd_c[MAXW]
    cdef uint64_t vt_c[MAXW]
    cdef int k
    for k in range(ntops):
        bd_c[k] = bd[k]
        vt_c[k] = sum(1 << v for v in tops[k])
    cdef uint64_t s, m, closure, vmask
    out = []
    for obj in masks:
        s = obj
        closure = 0
        vmask = 0
        m = s
        while m:
            k = ctz64(m)
            closure |= bd_c[k]
            vmask |= vt_c[k]
            m &= m - 1
        if d == 1:
            out.append((popcount64(vmask), popcount64(s)))
        else:
            out.append((popcount64(vmask), popcount64(closure), popcount64(s)))
    return out

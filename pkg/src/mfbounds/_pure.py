"""Pure-Python implementations of the hot kernels.

These mirror ``_speedups.pyx`` function for function and are used whenever
the compiled extension is unavailable (or ``MFBOUNDS_PURE_PYTHON`` is set).
Faces are vertex bitmasks: bit ``k`` stands for the ``k``-th smallest label.
"""
from itertools import combinations


def all_faces(facet_masks):
    """Return every face below ``facet_masks`` (empty face 0 included), sorted."""
    seen = set()
    for m in facet_masks:
        s = m
        while True:
            seen.add(s)
            if s == 0:
                break
            s = (s - 1) & m
    return sorted(seen)


def face_counts(facet_masks):
    """Number of faces of each size 0, 1, ..., max facet size."""
    faces = all_faces(facet_masks)
    top = max((bin(f).count("1") for f in faces), default=0)
    counts = [0] * (top + 1)
    for f in faces:
        counts[bin(f).count("1")] += 1
    return counts


def scan_tables(n, d):
    """Index tables shared by both scan implementations.

    Returns ``(tops, bd, cofaces)``: the (d+1)-subsets of ``range(n)`` in
    combinations order, for each of them a mask over the d-subsets it
    contains, and for each (d+2)-subset a mask over the tops it contains.
    """
    tops = list(combinations(range(n), d + 1))
    lows = {s: k for k, s in enumerate(combinations(range(n), d))}
    top_index = {t: k for k, t in enumerate(tops)}
    bd = []
    for t in tops:
        m = 0
        for s in combinations(t, d):
            m |= 1 << lows[s]
        bd.append(m)
    cofaces = []
    for u in combinations(range(n), d + 2):
        m = 0
        for t in combinations(u, d + 1):
            m |= 1 << top_index[t]
        cofaces.append(m)
    return tops, bd, cofaces


def boundary_rows(n, d):
    """Signed boundary of each (d+1)-subset as a dense row over the d-subsets."""
    lows = {s: k for k, s in enumerate(combinations(range(n), d))}
    rows = []
    for t in combinations(range(n), d + 1):
        row = [0] * len(lows)
        for pos in range(d + 1):
            row[lows[t[:pos] + t[pos + 1:]]] = -1 if pos % 2 else 1
        rows.append(row)
    return rows


def bareiss_rank(rows):
    """Exact rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        p = next((r for r in range(rank, nrows) if m[r][c]), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        piv = m[rank][c]
        for r in range(rank + 1, nrows):
            a = m[r][c]
            row = m[r]
            prow = m[rank]
            for k in range(c + 1, ncols):
                row[k] = (row[k] * piv - a * prow[k]) // prev
            row[c] = 0
        prev = piv
        rank += 1
    return rank


def scan_complexes(n, d, i, start, stop):
    """Masks ``S`` in ``[start, stop)`` whose d-simplices span a member of C(i,d).

    Bit ``k`` of ``S`` selects the ``k``-th (d+1)-subset of ``range(n)``. The
    complex is the downward closure of the selected simplices. Only d = 1, 2
    are supported: in those dimensions every missing face below dimension d
    has dimension at most 1, so only missing d- and (d+1)-faces need checking.
    """
    if d not in (1, 2):
        raise ValueError("scan supports d in {1, 2}")
    tops, bd, cofaces = scan_tables(n, d)
    brows = boundary_rows(n, d)
    ntops = len(tops)
    forbid_top = d > i
    forbid_above = d + 1 > i
    out = []
    for s in range(max(start, 1), stop):
        closure = 0
        m = s
        while m:
            low = m & -m
            closure |= bd[low.bit_length() - 1]
            m ^= low
        if forbid_top:
            bad = False
            for k in range(ntops):
                if not (s >> k) & 1 and (bd[k] & ~closure) == 0:
                    bad = True
                    break
            if bad:
                continue
        if forbid_above:
            if any((s & c) == c for c in cofaces):
                continue
        selected = [k for k in range(ntops) if (s >> k) & 1]
        if bareiss_rank([brows[k] for k in selected]) < len(selected):
            out.append(s)
    return out


def scan_face_numbers(n, d, masks):
    """``(f_0, ..., f_d)`` of the complex spanned by each scan mask (d = 1, 2)."""
    if d not in (1, 2):
        raise ValueError("scan supports d in {1, 2}")
    tops, bd, _ = scan_tables(n, d)
    verts = [sum(1 << v for v in t) for t in tops]
    out = []
    for s in masks:
        closure = vmask = 0
        m = s
        while m:
            low = m & -m
            k = low.bit_length() - 1
            closure |= bd[k]
            vmask |= verts[k]
            m ^= low
        f = [bin(vmask).count("1"), bin(closure).count("1"), bin(s).count("1")]
        out.append(tuple(f[:1] + f[2:]) if d == 1 else tuple(f))
    return out

"""Integer (co)homology of simplicial complexes via Smith normal form.

Everything is exact: matrices hold Python integers and elimination never
reduces modulo a prime, so torsion coefficients come out exactly.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from mfbounds.complex import (
    EMPTY,
    SimplicialComplex,
    link,
    max_missing_dim,
    missing_faces,
    relabel_dense,
)
from mfbounds.errors import IsSimplex


class IntegerMatrix:
    """Sparse integer matrix stored as one ``{col: value}`` dict per row."""

    def __init__(self, nrows: int, ncols: int, rows: list[dict[int, int]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [{} for _ in range(nrows)]

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]], ncols: int | None = None):
        nrows = len(entries)
        if ncols is None:
            ncols = len(entries[0]) if nrows else 0
        rows = [{j: int(v) for j, v in enumerate(r) if v} for r in entries]
        return cls(nrows, ncols, rows)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    def transpose(self) -> "IntegerMatrix":
        t = IntegerMatrix(self.ncols, self.nrows)
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                t.rows[j][i] = v
        return t

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        out = IntegerMatrix(self.nrows, other.ncols)
        for i, r in enumerate(self.rows):
            acc: dict[int, int] = defaultdict(int)
            for k, v in r.items():
                for j, w in other.rows[k].items():
                    acc[j] += v * w
            out.rows[i] = {j: v for j, v in acc.items() if v}
        return out

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.nrows}x{self.ncols}, nnz={sum(map(len, self.rows))})"


def _eliminate_units(rows: dict[int, dict[int, int]]) -> int:
    """Pivot on +-1 entries until none remain; returns the number of pivots.

    With a unit pivot the row operations are exact and the pivot row can be
    cleared by column operations that touch no other row, so both the pivot
    row and column are simply dropped.
    """
    colidx: dict[int, set[int]] = defaultdict(set)
    for rid, row in rows.items():
        for c in row:
            colidx[c].add(rid)
    pivots = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(colidx):
            holders = colidx.get(c)
            if not holders:
                continue
            best = None
            for rid in holders:
                v = rows[rid][c]
                if (v == 1 or v == -1) and (best is None or len(rows[rid]) < len(rows[best])):
                    best = rid
            if best is None:
                continue
            prow = rows.pop(best)
            pv = prow[c]
            for c2 in prow:
                colidx[c2].discard(best)
            for rid in list(colidx[c]):
                row = rows[rid]
                factor = row[c] * pv
                for c2, v2 in prow.items():
                    nv = row.get(c2, 0) - factor * v2
                    if nv:
                        if c2 not in row:
                            colidx[c2].add(rid)
                        row[c2] = nv
                    elif c2 in row:
                        del row[c2]
                        colidx[c2].discard(rid)
                if not row:
                    del rows[rid]
            del colidx[c]
            pivots += 1
            progress = True
    return pivots


def _dense_diagonal(a: list[list[int]]) -> list[int]:
    """Diagonalize by unimodular operations, always pivoting on the entry of
    least absolute value; returns the absolute nonzero diagonal."""
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    ri, rt = a[i], a[t]
                    for k in range(t, n):
                        ri[k] -= q * rt[k]
                    if ri[t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for k in range(t, m):
                        a[k][j] -= q * a[k][t]
                    if a[t][j]:
                        clean = False
            if clean:
                break
            # a remainder smaller than the pivot survived; move it to (t, t)
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def invariant_factors(diagonal: Sequence[int]) -> list[int]:
    """Turn any nonzero diagonal into the divisibility chain d1 | d2 | ..."""
    d = sorted(abs(x) for x in diagonal if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_normal_form(matrix: IntegerMatrix | Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Rank and invariant factors of an integer matrix.

    >>> smith_normal_form([[2, 4], [6, 8]])
    (2, [2, 4])
    """
    if not isinstance(matrix, IntegerMatrix):
        matrix = IntegerMatrix.from_dense(matrix)
    rows = {i: dict(r) for i, r in enumerate(matrix.rows) if r}
    units = _eliminate_units(rows)
    rest: list[int] = []
    if rows:
        cols = sorted({c for r in rows.values() for c in r})
        pos = {c: k for k, c in enumerate(cols)}
        dense = []
        for r in rows.values():
            line = [0] * len(cols)
            for c, v in r.items():
                line[pos[c]] = v
            dense.append(line)
        rest = _dense_diagonal(dense)
    factors = invariant_factors([1] * units + rest)
    return len(factors), factors


# -- chain complexes --------------------------------------------------------

def boundary_matrix(cx: SimplicialComplex, k: int) -> IntegerMatrix:
    """``∂_k`` from k-faces (columns) to (k-1)-faces (rows); ``∂_0`` is the
    augmentation onto the empty face."""
    src = cx.faces(k)
    dst = cx.faces(k - 1)
    index = {f: i for i, f in enumerate(dst)}
    mat = IntegerMatrix(len(dst), len(src))
    for j, face in enumerate(src):
        for pos in range(len(face)):
            mat.rows[index[face[:pos] + face[pos + 1:]]][j] = -1 if pos % 2 else 1
    return mat


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced (co)homology in degrees ``-1..dim``.

    ``betti[k]`` and ``torsion[k]`` refer to degree ``k - 1``; prefer the
    accessors, which return zero outside the stored range.
    """

    dim: int
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def betti_at(self, j: int) -> int:
        return self.betti[j + 1] if -1 <= j <= self.dim else 0

    def torsion_at(self, j: int) -> tuple[int, ...]:
        return self.torsion[j + 1] if -1 <= j <= self.dim else ()

    def group_at(self, j: int) -> tuple[int, tuple[int, ...]]:
        return self.betti_at(j), self.torsion_at(j)

    def is_zero_at(self, j: int) -> bool:
        return self.betti_at(j) == 0 and not self.torsion_at(j)

    def is_sphere(self, m: int) -> bool:
        """Whether this matches the reduced homology of ``S^m``."""
        return (
            self.betti_at(m) == 1
            and sum(self.betti) == 1
            and not any(self.torsion)
        )

    def to_dict(self) -> dict:
        return {
            "degrees": list(range(-1, self.dim + 1)),
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
        }


def _snf_table(cx: SimplicialComplex, transpose: bool = False) -> dict[int, tuple[int, list[int]]]:
    out = {}
    for k in range(0, cx.dim + 1):
        mat = boundary_matrix(cx, k)
        out[k] = smith_normal_form(mat.transpose() if transpose else mat)
    return out


def reduced_homology(cx: SimplicialComplex) -> HomologyProfile:
    d = cx.dim
    snf = _snf_table(cx)
    rank = lambda k: snf[k][0] if k in snf else 0  # noqa: E731
    betti, torsion = [], []
    for j in range(-1, d + 1):
        betti.append(len(cx.faces(j)) - rank(j) - rank(j + 1))
        factors = snf[j + 1][1] if j + 1 in snf else []
        torsion.append(tuple(x for x in factors if x > 1))
    return HomologyProfile(d, tuple(betti), tuple(torsion))


def reduced_cohomology(cx: SimplicialComplex) -> HomologyProfile:
    """Cohomology from the transposed (coboundary) maps ``δ^k = ∂_{k+1}^T``.

    The torsion of ``H^k`` comes from ``δ^{k-1}``, i.e. it sits one degree
    above the corresponding homology torsion.
    """
    d = cx.dim
    cosnf = _snf_table(cx, transpose=True)  # cosnf[k] describes δ^{k-1}
    rank = lambda k: cosnf[k + 1][0] if k + 1 in cosnf else 0  # noqa: E731
    betti, torsion = [], []
    for k in range(-1, d + 1):
        betti.append(len(cx.faces(k)) - rank(k) - rank(k - 1))
        factors = cosnf[k][1] if k in cosnf else []
        torsion.append(tuple(x for x in factors if x > 1))
    return HomologyProfile(d, tuple(betti), tuple(torsion))


def top_homology_nonzero(cx: SimplicialComplex) -> bool:
    """``H̃_d ≠ 0`` for ``d = dim``; only ``∂_d`` is needed since ``C_{d+1} = 0``."""
    d = cx.dim
    rank, _ = smith_normal_form(boundary_matrix(cx, d))
    return len(cx.faces(d)) - rank > 0


def is_homology_sphere(cx: SimplicialComplex) -> bool:
    """Every link ``lk(F)``, ``F = ∅`` included, has the homology of
    ``S^{dim - |F|}``. Visits every face, so cost grows with the face count."""
    d = cx.dim
    cache: dict[tuple, HomologyProfile] = {}
    for face in cx.all_faces():
        lk = link(cx, face)
        key = relabel_dense(lk).facets
        prof = cache.get(key)
        if prof is None:
            prof = cache[key] = reduced_homology(lk)
        if not prof.is_sphere(d - len(face)):
            return False
    return True


# -- Alexander duality ------------------------------------------------------

def gamma_complex(cx: SimplicialComplex) -> SimplicialComplex:
    """Complex on the missing faces (labelled 1..m in :func:`missing_faces`
    order) whose faces are the collections not covering the vertex set.

    Such a collection avoids some vertex ``x``, so the facets are the maximal
    sets ``{c : x ∉ c}`` over vertices ``x``.
    """
    if cx.is_empty_complex or len(cx.facets) == 1 and len(cx.facets[0]) == cx.n:
        raise IsSimplex("the vertex set is a face")
    cs = missing_faces(cx)
    groups = []
    for x in cx.vertices:
        g = [k for k, c in enumerate(cs, 1) if x not in c]
        if g:
            groups.append(g)
    if not groups:
        return EMPTY
    return SimplicialComplex._from_sets(groups)


@dataclass(frozen=True)
class DualityRow:
    j: int
    homology: tuple[int, tuple[int, ...]]
    cohomology_degree: int
    cohomology: tuple[int, tuple[int, ...]]

    @property
    def agrees(self) -> bool:
        return self.homology == self.cohomology


def alexander_duality_table(cx: SimplicialComplex) -> list[DualityRow]:
    """Compare ``H̃_j(cx)`` with ``H̃^{n-j-3}(Γ)`` over every relevant ``j``."""
    gamma = gamma_complex(cx)
    n = cx.n
    hom = reduced_homology(cx)
    coh = reduced_cohomology(gamma)
    js = set(range(-1, cx.dim + 1)) | {n - k - 3 for k in range(-1, gamma.dim + 1)}
    return [
        DualityRow(j, hom.group_at(j), n - j - 3, coh.group_at(n - j - 3))
        for j in sorted(js)
    ]


def alexander_duality_check(cx: SimplicialComplex) -> bool:
    return all(row.agrees for row in alexander_duality_table(cx))


# -- family membership ------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    i: int
    d: int
    n: int
    max_missing_dim: int
    is_flag: bool
    top_homology_nonzero: bool
    is_homology_sphere: bool

    @property
    def in_C(self) -> bool:
        """Member of C(i, d): top homology nonzero, no missing face above i."""
        return self.top_homology_nonzero and self.max_missing_dim <= self.i

    @property
    def in_HS(self) -> bool:
        """Member of HS(i, d, n)."""
        return self.is_homology_sphere and self.max_missing_dim <= self.i

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "d": self.d,
            "n": self.n,
            "max_missing_dim": self.max_missing_dim,
            "is_flag": self.is_flag,
            "top_homology_nonzero": self.top_homology_nonzero,
            "is_homology_sphere": self.is_homology_sphere,
            "in_C": self.in_C,
            "in_HS": self.in_HS,
        }


def classify(cx: SimplicialComplex, i: int) -> Classification:
    if i < 1:
        raise ValueError("i must be at least 1")
    mmd = max_missing_dim(cx)
    return Classification(
        i=i,
        d=cx.dim,
        n=cx.n,
        max_missing_dim=mmd,
        is_flag=mmd <= 1,
        top_homology_nonzero=top_homology_nonzero(cx),
        is_homology_sphere=is_homology_sphere(cx),
    )

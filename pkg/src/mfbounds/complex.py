"""Finite abstract simplicial complexes stored by their facets.

A complex is kept in canonical form: vertex labels are positive integers,
each facet is a sorted tuple, and the facets form a lexicographically
sorted antichain. Lower faces are materialized lazily (as vertex bitmasks
through :mod:`mfbounds.kernels`) and cached on the instance.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from mfbounds import kernels
from mfbounds.errors import (
    BadLabel,
    BadParams,
    EmptyInput,
    LinkConditionViolated,
    NotAFace,
    ParseError,
)

Face = tuple[int, ...]


class FVector(tuple):
    """Face numbers ``(f_{-1}, f_0, ..., f_d)``.

    Indexing is plain tuple indexing; use :meth:`f` for dimension-based
    access with the conventions ``f_{-1} = 1`` and ``f_j = 0`` outside
    ``-1..d``.
    """

    def f(self, j: int) -> int:
        if j < -1 or j + 1 >= len(self):
            return 0
        return self[j + 1]

    @property
    def dim(self) -> int:
        return len(self) - 2

    def without_empty(self) -> tuple[int, ...]:
        return tuple(self[1:])


def _maximal(sets: Iterable[Face]) -> tuple[Face, ...]:
    uniq = {tuple(sorted(set(s))) for s in sets}
    by_size = sorted(uniq, key=len, reverse=True)
    kept: list[Face] = []
    kept_sets: list[frozenset] = []
    for s in by_size:
        fs = frozenset(s)
        # only strictly larger sets can absorb s
        if any(len(k) > len(s) and fs <= k for k in kept_sets):
            continue
        kept.append(s)
        kept_sets.append(fs)
    return tuple(sorted(kept))


class SimplicialComplex:
    """Immutable simplicial complex given by its facets.

    Build instances with :func:`from_facets`; the constructor assumes its
    argument is already canonical. The complex ``{∅}`` is the module
    constant :data:`EMPTY` (facets ``((),)``, dimension -1).
    """

    def __init__(self, facets: tuple[Face, ...]):
        self.facets = facets
        self.vertices: tuple[int, ...] = tuple(sorted({v for f in facets for v in f}))

    @classmethod
    def _from_sets(cls, sets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        facets = _maximal(tuple(s) for s in sets)
        if not facets:
            raise EmptyInput("complex has no faces")
        if facets == ((),):
            return EMPTY
        return cls(tuple(f for f in facets if f))

    def __repr__(self) -> str:
        if self.is_empty_complex:
            return "SimplicialComplex(EMPTY)"
        return f"SimplicialComplex({[list(f) for f in self.facets]})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == ((),)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def max_label(self) -> int:
        return self.vertices[-1] if self.vertices else 0

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    # -- bitmask view ----------------------------------------------------
    @cached_property
    def _bit(self) -> dict[int, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    def mask(self, face: Iterable[int]) -> int:
        bit = self._bit
        m = 0
        for v in face:
            if v not in bit:
                return -1
            m |= 1 << bit[v]
        return m

    def unmask(self, m: int) -> Face:
        out = []
        k = 0
        while m:
            if m & 1:
                out.append(self.vertices[k])
            m >>= 1
            k += 1
        return tuple(out)

    @cached_property
    def face_masks(self) -> frozenset[int]:
        return frozenset(kernels.all_faces([self.mask(f) for f in self.facets]))

    def __contains__(self, face: Iterable[int]) -> bool:
        m = self.mask(face)
        return m >= 0 and m in self.face_masks

    @cached_property
    def _faces_by_dim(self) -> tuple[tuple[Face, ...], ...]:
        levels: list[list[Face]] = [[] for _ in range(self.dim + 2)]
        for m in self.face_masks:
            f = self.unmask(m)
            levels[len(f)].append(f)
        return tuple(tuple(sorted(level)) for level in levels)

    def faces(self, j: int) -> tuple[Face, ...]:
        """All faces of dimension ``j`` (``j = -1`` gives the empty face)."""
        if j < -1 or j > self.dim:
            return ()
        return self._faces_by_dim[j + 1]

    def all_faces(self) -> list[Face]:
        """Every face, by increasing size then lexicographically."""
        return [f for level in self._faces_by_dim for f in level]

    @cached_property
    def _f_vector(self) -> FVector:
        counts = kernels.face_counts([self.mask(f) for f in self.facets])
        return FVector(counts)

    @cached_property
    def graph_neighbors(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for f in self.facets:
            for v in f:
                nbrs[v].update(f)
        return {v: frozenset(s - {v}) for v, s in nbrs.items()}


EMPTY = SimplicialComplex(((),))


def from_facets(raw: Sequence[Sequence[int]]) -> SimplicialComplex:
    """Canonical complex generated by ``raw``.

    >>> from_facets([[1, 2], [2, 3], [1, 2]]).facets
    ((1, 2), (2, 3))
    """
    if not raw:
        raise EmptyInput("no facets given")
    sets = []
    for s in raw:
        s = list(s)
        if not s:
            raise EmptyInput("facets must be nonempty")
        for v in s:
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise BadLabel(f"vertex label {v!r} is not a positive integer")
        sets.append(s)
    return SimplicialComplex._from_sets(sets)


# -- facet file format ------------------------------------------------------

def parse_facets(text: str) -> SimplicialComplex:
    """Parse the facet file format: one facet per line, ``#`` comments."""
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            facet = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if any(v < 1 for v in facet):
            raise ParseError(f"line {lineno}: labels must be positive integers")
        raw.append(facet)
    if not raw:
        raise ParseError("no facets found")
    return from_facets(raw)


def read_facets(path: str | Path) -> SimplicialComplex:
    return parse_facets(Path(path).read_text(encoding="utf-8"))


def format_facets(cx: SimplicialComplex, header: str | None = None) -> str:
    if cx.is_empty_complex:
        raise BadParams("the complex {∅} has no facet-file representation")
    lines = [f"# {header}"] if header else []
    lines.extend(" ".join(map(str, f)) for f in cx.facets)
    return "\n".join(lines) + "\n"


def write_facets(cx: SimplicialComplex, path: str | Path, header: str | None = None) -> None:
    Path(path).write_text(format_facets(cx, header), encoding="utf-8")


# -- counting ---------------------------------------------------------------

def f_vector(cx: SimplicialComplex) -> FVector:
    return cx._f_vector


def face_polynomial(cx: SimplicialComplex) -> list[int]:
    """Coefficients of ``sum_j f_{j-1} t^j``."""
    return list(f_vector(cx))


# -- local operations -------------------------------------------------------

def _as_face(F: Iterable[int]) -> Face:
    return tuple(sorted(set(F)))


def _require_face(cx: SimplicialComplex, F: Face) -> None:
    if F not in cx:
        raise NotAFace(f"{list(F)} is not a face")


def link(cx: SimplicialComplex, F: Iterable[int] = ()) -> SimplicialComplex:
    """``lk(F) = {T : T ∩ F = ∅, T ∪ F ∈ cx}``; the link of a facet is EMPTY."""
    F = _as_face(F)
    _require_face(cx, F)
    if not F:
        return cx
    fs = set(F)
    return SimplicialComplex._from_sets(
        [v for v in g if v not in fs] for g in cx.facets if fs.issubset(g)
    )


def antistar(cx: SimplicialComplex, F: Iterable[int]) -> SimplicialComplex:
    """Faces of ``cx`` that do not contain ``F``."""
    F = _as_face(F)
    if not F:
        raise BadParams("antistar of the empty face is the void complex")
    fs = set(F)
    sets = []
    for g in cx.facets:
        if fs.issubset(g):
            sets.extend([v for v in g if v != x] for x in F)
        else:
            sets.append(g)
    return SimplicialComplex._from_sets(sets)


def star_faces(cx: SimplicialComplex, F: Iterable[int]) -> list[Face]:
    """Open star: every face containing ``F``, by size then lexicographically."""
    F = _as_face(F)
    _require_face(cx, F)
    fm = cx.mask(F)
    return sorted(
        (cx.unmask(m) for m in cx.face_masks if m & fm == fm),
        key=lambda f: (len(f), f),
    )


def closed_star(cx: SimplicialComplex, F: Iterable[int]) -> SimplicialComplex:
    F = _as_face(F)
    _require_face(cx, F)
    fs = set(F)
    return SimplicialComplex._from_sets(g for g in cx.facets if fs.issubset(g))


def relabel(cx: SimplicialComplex, mapping: dict[int, int]) -> SimplicialComplex:
    if cx.is_empty_complex:
        return cx
    if len(set(mapping[v] for v in cx.vertices)) != cx.n:
        raise BadParams("relabeling must be injective")
    return SimplicialComplex._from_sets([mapping[v] for v in f] for f in cx.facets)


def relabel_dense(cx: SimplicialComplex) -> SimplicialComplex:
    """Relabel vertices order-preservingly to ``1..n``."""
    return relabel(cx, {v: k for k, v in enumerate(cx.vertices, 1)})


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join with ``b``'s labels shifted up by the largest label of ``a``."""
    off = a.max_label
    facets = tuple(
        sorted(g + tuple(v + off for v in h) for g in a.facets for h in b.facets)
    )
    if facets == ((),):
        return EMPTY
    return SimplicialComplex(facets)


def two_points() -> SimplicialComplex:
    return from_facets([[1], [2]])


def suspension(cx: SimplicialComplex) -> SimplicialComplex:
    return join(cx, two_points())


def cone(cx: SimplicialComplex) -> SimplicialComplex:
    return join(cx, from_facets([[1]]))


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.is_empty_complex:
        return b
    if b.is_empty_complex:
        return a
    off = a.max_label
    return SimplicialComplex._from_sets(
        list(a.facets) + [[v + off for v in h] for h in b.facets]
    )


# -- missing faces ----------------------------------------------------------

def missing_faces(cx: SimplicialComplex) -> list[Face]:
    """Minimal non-faces on the vertex set, by size then lexicographically.

    A candidate of size ``s`` is built from an (s-1)-face ``A`` plus one
    vertex above ``max(A)``, so each candidate is generated exactly once and
    supersets of known missing faces never pass the boundary test.
    """
    faces = cx.face_masks
    n = cx.n
    out: list[Face] = []
    level = [1 << k for k in range(n)]
    for size in range(2, cx.dim + 3):
        found = []
        for a in level:
            for v in range(a.bit_length(), n):
                cand = a | (1 << v)
                if cand in faces:
                    continue
                m = cand
                ok = True
                while m:
                    low = m & -m
                    if (cand ^ low) not in faces:
                        ok = False
                        break
                    m ^= low
                if ok:
                    found.append(cx.unmask(cand))
        out.extend(sorted(found))
        level = [m for m in faces if bin(m).count("1") == size]
    return out


def max_missing_dim(cx: SimplicialComplex) -> int:
    """Largest dimension of a missing face, or -1 if there is none."""
    return max((len(f) - 1 for f in missing_faces(cx)), default=-1)


def is_flag(cx: SimplicialComplex) -> bool:
    return max_missing_dim(cx) <= 1


# -- edge operations --------------------------------------------------------

def _edge(cx: SimplicialComplex, e: Sequence[int]) -> tuple[int, int]:
    if len(e) != 2 or e[0] == e[1]:
        raise BadParams(f"{list(e)} is not an edge")
    _require_face(cx, _as_face(e))
    return e[0], e[1]


def subdivide_edge(cx: SimplicialComplex, e: Sequence[int]) -> SimplicialComplex:
    """Stellar subdivision of edge ``e`` with a new vertex ``max label + 1``."""
    u, v = _edge(cx, e)
    w = cx.max_label + 1
    sets = []
    for g in cx.facets:
        if u in g and v in g:
            sets.append([x for x in g if x != u] + [w])
            sets.append([x for x in g if x != v] + [w])
        else:
            sets.append(g)
    return SimplicialComplex._from_sets(sets)


def _face_set(cx: SimplicialComplex) -> set[Face]:
    return set(cx.all_faces())


def satisfies_link_condition(cx: SimplicialComplex, e: Sequence[int]) -> bool:
    """``lk(u) ∩ lk(v) == lk({u, v})`` as sets of faces."""
    u, v = _edge(cx, e)
    common = _face_set(link(cx, [u])) & _face_set(link(cx, [v]))
    return common == _face_set(link(cx, [u, v]))


def in_induced_4cycle(cx: SimplicialComplex, e: Sequence[int]) -> bool:
    """Whether edge ``e`` lies on a chordless 4-cycle of the 1-skeleton."""
    u, v = _edge(cx, e)
    nb = cx.graph_neighbors
    for a in nb[v] - {u} - nb[u]:
        for b in nb[u] - {v} - nb[v]:
            if b in nb[a]:
                return True
    return False


CONTRACT_CHECKS = ("both", "link", "flag", "none")


def contract_edge(
    cx: SimplicialComplex, e: Sequence[int], check: str = "both"
) -> SimplicialComplex:
    """Identify ``e[1]`` into ``e[0]``.

    ``check`` selects the precondition: ``"link"`` is the link condition,
    ``"flag"`` forbids edges on an induced 4-cycle, ``"both"`` requires both,
    ``"none"`` skips checking.
    """
    if check not in CONTRACT_CHECKS:
        raise BadParams(f"check must be one of {CONTRACT_CHECKS}")
    u, v = _edge(cx, e)
    if check in ("both", "link") and not satisfies_link_condition(cx, (u, v)):
        raise LinkConditionViolated(f"lk({u}) ∩ lk({v}) != lk({u},{v})")
    if check in ("both", "flag") and in_induced_4cycle(cx, (u, v)):
        raise LinkConditionViolated(f"edge {u},{v} lies on an induced 4-cycle")
    return SimplicialComplex._from_sets(
        [u if x == v else x for x in g] if v in g else g for g in cx.facets
    )


def boundary_of_simplex(k: int) -> SimplicialComplex:
    """``∂σ^k`` on vertices ``1..k+1`` (``∂σ^0`` is EMPTY)."""
    if k < 0:
        raise BadParams("k must be nonnegative")
    if k == 0:
        return EMPTY
    return SimplicialComplex(tuple(combinations(range(1, k + 2), k)))


def simplex(k: int) -> SimplicialComplex:
    return SimplicialComplex((tuple(range(1, k + 2)),))

"""Canonical relabeling and isomorphism testing for small complexes.

Vertex colours are refined by the multiset of colour patterns of the
facets through each vertex, then ties are broken by individualizing each
vertex of the first non-singleton cell in turn, skipping vertices already
known to be equivalent under discovered automorphisms. Worst case is
exponential; intended for at most a dozen or so vertices.
"""
from __future__ import annotations

from mfbounds.complex import SimplicialComplex, f_vector


def _refine(incident: dict[int, list[tuple[int, ...]]], colors: dict[int, int]) -> dict[int, int]:
    while True:
        sig = {
            v: (
                colors[v],
                tuple(sorted(tuple(sorted(colors[u] for u in f if u != v)) for f in fs)),
            )
            for v, fs in incident.items()
        }
        ranks = {s: k for k, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[s] for v, s in sig.items()}
        if len(ranks) == len(set(colors.values())):
            return new
        colors = new


def canonical_form(cx: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least facet list over all refinement-consistent
    relabelings to ``1..n``; equal for two complexes iff they are isomorphic.

    Children of a search node that lie in one orbit of the automorphisms
    found so far (those fixing the individualized path) are explored once.
    """
    if cx.is_empty_complex:
        return cx.facets
    incident: dict[int, list[tuple[int, ...]]] = {v: [] for v in cx.vertices}
    for f in cx.facets:
        for v in f:
            incident[v].append(f)
    best: list = []  # [form, labeling]
    autos: list[dict[int, int]] = []

    def orbit_reps(cell: list[int], path: tuple[int, ...]) -> list[int]:
        parent = {v: v for v in cx.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in autos:
            if all(a[p] == p for p in path):
                for v, w in a.items():
                    parent[find(v)] = find(w)
        seen, reps = set(), []
        for v in cell:
            r = find(v)
            if r not in seen:
                seen.add(r)
                reps.append(v)
        return reps

    def search(colors: dict[int, int], path: tuple[int, ...]) -> None:
        colors = _refine(incident, colors)
        cells: dict[int, list[int]] = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            form = tuple(sorted(tuple(sorted(colors[v] + 1 for v in f)) for f in cx.facets))
            if not best or form < best[0]:
                best[:] = [form, colors]
            elif form == best[0]:
                # two leaves with the same form differ by an automorphism
                inv = {lab: v for v, lab in best[1].items()}
                autos.append({v: inv[lab] for v, lab in colors.items()})
            return
        explored: set[int] = set()
        for v in target:
            if v in explored:
                continue
            search({u: 2 * c + (u == v) for u, c in colors.items()}, path + (v,))
            explored.update(set(target) - set(orbit_reps(target, path)) | {v})

    search({v: 0 for v in cx.vertices}, ())
    return best[0]


def is_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    if a.n != b.n or len(a.facets) != len(b.facets) or f_vector(a) != f_vector(b):
        return False
    return canonical_form(a) == canonical_form(b)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfbounds.complex import from_facets, relabel, subdivide_edge
from mfbounds.constructions import construct_S, construct_S_idn, stacked_sphere
from mfbounds.isomorphism import canonical_form, is_isomorphic

from zoo import cycle, facet_lists, octahedron, rp2


def shuffled(cx, seed):
    rng = random.Random(seed)
    labels = list(range(1, 3 * cx.n + 1))
    rng.shuffle(labels)
    return relabel(cx, dict(zip(cx.vertices, labels)))


@pytest.mark.parametrize("cx", [cycle(6), octahedron(), rp2(), construct_S(2, 4), stacked_sphere(3, 8),
                                construct_S(1, 4), subdivide_edge(octahedron(), (1, 3))])
def test_relabel_invariance(cx):
    for seed in range(5):
        assert canonical_form(shuffled(cx, seed)) == canonical_form(cx)


@settings(max_examples=60)
@given(facet_lists(6, 3, 6), st.integers(0, 10**6))
def test_random_relabel_invariance(raw, seed):
    cx = from_facets(raw)
    assert is_isomorphic(cx, shuffled(cx, seed))


def test_distinguishes_cycles():
    assert not is_isomorphic(cycle(6), from_facets([[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]]))


def test_distinguishes_same_f_vector():
    # two stacked 2-spheres on 7 vertices with different degree sequences
    a = stacked_sphere(2, 7)
    facets = set(construct_S(3, 2).facets)
    for w in range(5, 8):
        f = max(facets)
        facets.remove(f)
        facets.update(tuple(sorted([x for x in f if x != y] + [w])) for y in f)
    b = from_facets([list(f) for f in facets])
    assert a.n == b.n and len(a.facets) == len(b.facets)
    degrees = lambda cx: sorted(len(cx.graph_neighbors[v]) for v in cx.vertices)  # noqa: E731
    assert (degrees(a) == degrees(b)) == is_isomorphic(a, b)


def test_stacked_matches_sidn():
    assert is_isomorphic(stacked_sphere(2, 6), construct_S_idn(3, 2, 6))


def test_canonical_form_is_dense():
    form = canonical_form(shuffled(octahedron(), 3))
    assert sorted({v for f in form for v in f}) == list(range(1, 7))

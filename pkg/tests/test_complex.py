import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfbounds.complex import (
    EMPTY,
    antistar,
    boundary_of_simplex,
    contract_edge,
    f_vector,
    format_facets,
    from_facets,
    in_induced_4cycle,
    is_flag,
    join,
    link,
    max_missing_dim,
    missing_faces,
    parse_facets,
    read_facets,
    relabel_dense,
    satisfies_link_condition,
    star_faces,
    subdivide_edge,
    suspension,
    write_facets,
)
from mfbounds.constructions import construct_S
from mfbounds.errors import BadLabel, EmptyInput, LinkConditionViolated, NotAFace, ParseError
from mfbounds.isomorphism import is_isomorphic

from zoo import brute_f_vector, brute_faces, brute_missing_faces, complexes, cycle, facet_lists, octahedron


class TestCanonicalForm:
    def test_dedup_and_sort(self):
        assert from_facets([[1, 2], [2, 3], [1, 2]]).facets == ((1, 2), (2, 3))

    def test_non_maximal_absorbed(self):
        assert from_facets([[1, 2, 3], [1, 2]]).facets == ((1, 2, 3),)

    def test_isolated_vertices(self):
        cx = from_facets([[1], [2]])
        assert cx.dim == 0 and cx.facets == ((1,), (2,))

    def test_labels_sorted_within_facet(self):
        assert from_facets([[3, 1, 2]]).facets == ((1, 2, 3),)

    @pytest.mark.parametrize("raw", [[], [[]]])
    def test_empty_input(self, raw):
        with pytest.raises(EmptyInput):
            from_facets(raw)

    @pytest.mark.parametrize("bad", [0, -1, 1.5, "a", True])
    def test_bad_label(self, bad):
        with pytest.raises(BadLabel):
            from_facets([[1, bad]])

    @given(facet_lists())
    def test_idempotent(self, raw):
        cx = from_facets(raw)
        assert from_facets([list(f) for f in cx.facets]) == cx

    @given(facet_lists())
    def test_facets_form_antichain(self, raw):
        fs = [set(f) for f in from_facets(raw).facets]
        assert not any(a < b for a in fs for b in fs)


class TestFVector:
    def test_triangle(self):
        assert f_vector(cycle(3)) == (1, 3, 3)

    def test_octahedron(self):
        assert f_vector(octahedron()) == (1, 6, 12, 8)

    def test_s24_against_polynomial_oracle(self):
        # (1+3t+3t^2)^2 (1+2t), expanded by hand-rolled convolution
        def mul(a, b):
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                for j, y in enumerate(b):
                    out[i + j] += x * y
            return out

        expected = mul(mul([1, 3, 3], [1, 3, 3]), [1, 2])
        assert expected == [1, 8, 27, 48, 45, 18]
        assert list(f_vector(construct_S(2, 4))) == expected

    def test_empty_complex(self):
        assert f_vector(EMPTY) == (1,) and EMPTY.dim == -1

    @given(facet_lists())
    def test_matches_brute_force(self, raw):
        assert tuple(f_vector(from_facets(raw))) == brute_f_vector(raw)


class TestLinkStar:
    def test_vertex_link_in_octahedron_is_4cycle(self):
        lk = link(octahedron(), [1])
        assert f_vector(lk) == (1, 4, 4) and is_isomorphic(lk, cycle(4))

    def test_antistar_of_vertex_in_triangle(self):
        ast = antistar(cycle(3), [1])
        assert ast.facets == ((2, 3),) and ast.vertices == (2, 3)

    def test_link_of_empty_face(self):
        cx = octahedron()
        assert link(cx, []) == cx

    def test_link_of_facet_is_empty_complex(self):
        assert link(cycle(4), [1, 2]) == EMPTY

    def test_link_of_non_face(self):
        with pytest.raises(NotAFace):
            link(cycle(4), [1, 3])
        with pytest.raises(NotAFace):
            star_faces(cycle(4), [1, 3])

    @given(facet_lists(), st.data())
    def test_link_matches_definition(self, raw, data):
        cx = from_facets(raw)
        faces = brute_faces(raw)
        F = data.draw(st.sampled_from(sorted(faces)))
        expected = {T for T in faces if not set(T) & set(F) and tuple(sorted(set(T) | set(F))) in faces}
        got = {f for f in brute_faces(link(cx, F).facets) if f} if link(cx, F) != EMPTY else set()
        assert got == expected

    @given(facet_lists(), st.data())
    def test_vertex_decomposition(self, raw, data):
        cx = from_facets(raw)
        v = data.draw(st.sampled_from(cx.vertices))
        lk = f_vector(link(cx, [v]))
        ast = f_vector(antistar(cx, [v]))
        for j in range(0, cx.dim + 1):
            assert cx._f_vector.f(j) == lk.f(j - 1) + ast.f(j)

    @given(facet_lists(), st.data())
    def test_star_antistar_partition(self, raw, data):
        cx = from_facets(raw)
        F = data.draw(st.sampled_from(sorted(brute_faces(raw))))
        star = star_faces(cx, F)
        ast = set(antistar(cx, F).all_faces())
        everything = set(cx.all_faces())
        assert set(star) | ast == everything and not set(star) & ast


class TestJoin:
    def test_two_points_join_is_4cycle(self):
        pts = from_facets([[1], [2]])
        assert is_isomorphic(join(pts, pts), cycle(4))

    def test_suspension_of_4cycle_is_octahedron(self):
        assert is_isomorphic(suspension(cycle(4)), octahedron())

    def test_empty_is_identity(self):
        cx = cycle(5)
        assert join(EMPTY, cx) == cx and join(cx, EMPTY) == cx

    @settings(max_examples=40)
    @given(facet_lists(5, 3, 4), facet_lists(5, 3, 4))
    def test_face_polynomial_multiplies(self, ra, rb):
        a, b = from_facets(ra), from_facets(rb)
        fa, fb = list(f_vector(a)), list(f_vector(b))
        prod = [0] * (len(fa) + len(fb) - 1)
        for i, x in enumerate(fa):
            for j, y in enumerate(fb):
                prod[i + j] += x * y
        assert list(f_vector(join(a, b))) == prod

    @settings(max_examples=40)
    @given(facet_lists(5, 3, 4), facet_lists(5, 3, 4))
    def test_missing_faces_of_join(self, ra, rb):
        a, b = from_facets(ra), from_facets(rb)
        a, b = relabel_dense(a), relabel_dense(b)
        off = a.max_label
        expected = sorted(
            missing_faces(a) + [tuple(v + off for v in m) for m in missing_faces(b)],
            key=lambda f: (len(f), f),
        )
        assert missing_faces(join(a, b)) == expected


class TestMissingFaces:
    def test_4cycle(self):
        c = cycle(4)
        assert missing_faces(c) == [(1, 3), (2, 4)] and max_missing_dim(c) == 1 and is_flag(c)

    def test_triangle(self):
        c = cycle(3)
        assert missing_faces(c) == [(1, 2, 3)] and max_missing_dim(c) == 2 and not is_flag(c)

    def test_s24(self):
        mf = missing_faces(construct_S(2, 4))
        assert sorted(len(m) - 1 for m in mf) == [1, 2, 2]

    def test_simplex_has_none(self):
        assert missing_faces(from_facets([[1, 2, 3]])) == [] and max_missing_dim(from_facets([[1, 2, 3]])) == -1

    @given(facet_lists())
    def test_matches_brute_force(self, raw):
        got = missing_faces(from_facets(raw))
        assert got == sorted(brute_missing_faces(raw), key=lambda f: (len(f), f))

    @settings(max_examples=30)
    @given(st.integers(1, 4), st.integers(1, 5), st.data())
    def test_link_keeps_missing_face_bound(self, i, d, data):
        if i > d + 1:
            i = d + 1
        cx = construct_S(i, d)
        F = data.draw(st.sampled_from(cx.all_faces()))
        assert max_missing_dim(link(cx, F)) <= i


class TestEdgeOperations:
    def test_subdivide_4cycle(self):
        assert is_isomorphic(subdivide_edge(cycle(4), (1, 2)), cycle(5))

    def test_subdivide_octahedron(self):
        sub = subdivide_edge(octahedron(), (1, 3))
        assert f_vector(sub) == (1, 7, 15, 10) and is_flag(sub)

    def test_subdivide_non_edge(self):
        with pytest.raises(NotAFace):
            subdivide_edge(cycle(4), (1, 3))

    def test_contract_5cycle(self):
        assert is_isomorphic(contract_edge(cycle(5), (1, 2)), cycle(4))

    def test_contract_4cycle_edge_rejected(self):
        with pytest.raises(LinkConditionViolated):
            contract_edge(cycle(4), (1, 2))

    def test_4cycle_edge_passes_link_condition_only(self):
        assert satisfies_link_condition(cycle(4), (1, 2))
        assert in_induced_4cycle(cycle(4), (1, 2))
        assert f_vector(contract_edge(cycle(4), (1, 2), check="link")) == (1, 3, 3)

    def test_link_condition_failure(self):
        # contracting an edge of the boundary of a tetrahedron collapses it
        with pytest.raises(LinkConditionViolated):
            contract_edge(boundary_of_simplex(3), (1, 2), check="link")

    @settings(max_examples=25)
    @given(st.integers(0, 10**6))
    def test_subdivide_then_contract_restores(self, seed):
        rng = random.Random(seed)
        cx = construct_S(rng.choice([1, 2]), rng.choice([2, 3]))
        for _ in range(rng.randrange(3)):
            cx = subdivide_edge(cx, rng.choice(cx.faces(1)))
        u, v = rng.choice(cx.faces(1))
        sub = subdivide_edge(cx, (u, v))
        w = sub.max_label
        for keep in (u, v):
            assert contract_edge(sub, (keep, w), check="link") == cx


class TestFacetFile:
    def test_round_trip(self, tmp_path):
        cx = construct_S(2, 4)
        path = tmp_path / "s24.txt"
        write_facets(cx, path, header="S(2,4)")
        assert read_facets(path) == cx

    def test_comments_and_blank_lines(self):
        cx = parse_facets("# header\n\n2 1 3   # trailing\n3 4\n")
        assert cx.facets == ((1, 2, 3), (3, 4))

    @pytest.mark.parametrize("text", ["", "# only a comment\n", "1 x\n", "1 0\n"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_facets(text)

    def test_writer_is_canonical(self):
        assert format_facets(from_facets([[3, 2], [1, 2]])) == "1 2\n2 3\n"

    @given(complexes)
    def test_format_parse_inverse(self, cx):
        assert parse_facets(format_facets(cx)) == cx

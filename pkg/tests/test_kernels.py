"""Both kernel backends must agree with each other and with direct oracles."""
import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfbounds import _pure, kernels
from mfbounds.complex import f_vector, from_facets, max_missing_dim
from mfbounds.homology import top_homology_nonzero

from zoo import rational_rank

IMPLS = kernels.implementations()
BACKENDS = sorted(IMPLS)


def test_default_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_fallback_selected_by_environment():
    env = dict(os.environ, MFBOUNDS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from mfbounds import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.skipif("cython" not in IMPLS, reason="compiled extension not built")
def test_compiled_backend_is_default():
    assert kernels.BACKEND == "cython"


masks = st.lists(st.integers(1, (1 << 10) - 1), min_size=1, max_size=6)


@pytest.mark.parametrize("name", BACKENDS)
@given(masks)
def test_all_faces(name, ms):
    expected = set()
    for m in ms:
        expected.update(s for s in range(m + 1) if s & m == s)
    assert IMPLS[name].all_faces(ms) == sorted(expected)


@pytest.mark.parametrize("name", BACKENDS)
@given(masks)
def test_face_counts(name, ms):
    faces = _pure.all_faces(ms)
    expected = [0] * (max(bin(f).count("1") for f in faces) + 1)
    for f in faces:
        expected[bin(f).count("1")] += 1
    assert IMPLS[name].face_counts(ms) == expected


@pytest.mark.parametrize("name", BACKENDS)
@given(st.integers(1, 6).flatmap(lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                                                     min_size=1, max_size=7)))
def test_bareiss_rank(name, rows):
    assert IMPLS[name].bareiss_rank(rows) == rational_rank(rows)


def test_overflow_falls_back():
    big = [[2**40, 1], [3, 2**40]]
    assert kernels.bareiss_rank(big) == 2


@pytest.mark.parametrize("d,n,i", [(1, 5, 1), (1, 5, 2), (1, 6, 1), (2, 5, 2), (2, 5, 3), (2, 5, 1)])
def test_scan_backends_agree(d, n, i):
    results = {name: impl.scan_complexes(n, d, i, 0, 1 << (n * (n - 1) // 2 if d == 1 else n * (n - 1) * (n - 2) // 6))
               for name, impl in IMPLS.items()}
    assert len({tuple(r) for r in results.values()}) == 1


@pytest.mark.parametrize("d,n,i", [(1, 5, 1), (1, 5, 2), (2, 5, 2)])
def test_scan_matches_library_membership(d, n, i):
    from itertools import combinations

    tops = list(combinations(range(1, n + 1), d + 1))
    got = set(kernels.scan_complexes(n, d, i, 0, 1 << len(tops)))
    for s in range(1, 1 << len(tops)):
        cx = from_facets([list(t) for k, t in enumerate(tops) if (s >> k) & 1])
        member = cx.dim == d and top_homology_nonzero(cx) and max_missing_dim(cx) <= i
        assert (s in got) == member, s


@pytest.mark.parametrize("name", BACKENDS)
@pytest.mark.parametrize("d,n", [(1, 6), (2, 5)])
def test_scan_face_numbers(name, d, n):
    from itertools import combinations

    tops = list(combinations(range(1, n + 1), d + 1))
    sample = list(range(1, 1 << len(tops), 37))
    got = IMPLS[name].scan_face_numbers(n, d, sample)
    for s, f in zip(sample, got):
        cx = from_facets([list(t) for k, t in enumerate(tops) if (s >> k) & 1])
        assert f == tuple(f_vector(cx)[1:]) + (0,) * (d + 1 - cx.dim - 1)


def test_scan_rejects_other_dimensions():
    for impl in IMPLS.values():
        with pytest.raises(ValueError):
            impl.scan_complexes(5, 3, 1, 0, 10)


def test_reload_is_stable():
    assert importlib.reload(kernels).BACKEND in ("cython", "python")


def test_benchmark_runs():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out = subprocess.run([sys.executable, os.path.join(root, "benchmarks", "bench_kernels.py"), "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    assert "scan_complexes" in out.stdout

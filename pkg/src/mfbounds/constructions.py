"""Extremal complexes S(i,d), Sk(d,n), S(i,d,n) and the MPW coefficient tables."""
from __future__ import annotations

from dataclasses import dataclass, field

from mfbounds.complex import (
    EMPTY,
    SimplicialComplex,
    boundary_of_simplex,
    f_vector,
    join,
)
from mfbounds.errors import (
    BadParams,
    ConstructionError,
    RecurrenceClosedFormMismatch,
    TooFewVertices,
)
from mfbounds.polyvec import binomial, qr


@dataclass(frozen=True)
class QRDecomposition:
    d: int
    i: int
    q: int
    r: int

    @classmethod
    def of(cls, d: int, i: int) -> "QRDecomposition":
        q, r = qr(d, i)
        return cls(d, i, q, r)


def _join_all(parts: list[SimplicialComplex]) -> SimplicialComplex:
    out = EMPTY
    for p in parts:
        out = join(out, p)
    return out


def construct_S(i: int, d: int) -> SimplicialComplex:
    """``q`` copies of ``∂σ^i`` joined with ``∂σ^r``; ``i > d+1`` acts as ``d+1``.

    ``d = -1`` gives the complex ``{∅}``.
    """
    if i < 1 or d < -1:
        raise BadParams("need i >= 1 and d >= -1")
    if d == -1:
        return EMPTY
    i = min(i, d + 1)
    q, r = qr(d, i)
    return _join_all([boundary_of_simplex(i)] * q + [boundary_of_simplex(r)])


def crosspolytope(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-dimensional crosspolytope, i.e. S(1, d)."""
    return construct_S(1, d)


def stacked_sphere(d: int, n: int) -> SimplicialComplex:
    """Boundary of a stacked (d+1)-polytope with ``n`` vertices.

    Starts from ``∂σ^{d+1}`` and repeatedly replaces the lexicographically
    smallest facet by the cone from a new vertex over its boundary.
    ``Sk(0, 2)`` (two points) is allowed.
    """
    if d < 0 or n < d + 2 or (d == 0 and n != 2):
        raise BadParams(f"no stacked {d}-sphere with {n} vertices")
    facets = set(boundary_of_simplex(d + 1).facets)
    for w in range(d + 3, n + 1):
        f = min(facets)
        facets.remove(f)
        for x in f:
            facets.add(tuple(v for v in f if v != x) + (w,))
    return SimplicialComplex(tuple(sorted(facets)))


def construct_S_idn(i: int, d: int, n: int, validate: bool = True) -> SimplicialComplex:
    """S(i, d, n): ``q`` copies of ``∂σ^i`` joined with ``Sk(r-1, n - q(i+1))``,
    or, when ``r = 1`` and ``n > q(i+1) + 2``, ``q - 1`` copies joined with
    ``Sk(i, n - (q-1)(i+1))``.

    With ``validate`` the result is checked to lie in HS(i, d, n).
    """
    if i < 1 or d < 0:
        raise BadParams("need i >= 1 and d >= 0")
    i = min(i, d + 1)
    q, r = qr(d, i)
    if n < d + q + 2:
        raise TooFewVertices(f"HS({i},{d},{n}) is empty: need n >= {d + q + 2}")
    if r == 1 and n > q * (i + 1) + 2:
        if q == 0:
            raise BadParams("0-dimensional spheres have exactly 2 vertices")
        parts = [boundary_of_simplex(i)] * (q - 1) + [stacked_sphere(i, n - (q - 1) * (i + 1))]
    else:
        parts = [boundary_of_simplex(i)] * q + [stacked_sphere(r - 1, n - q * (i + 1))]
    cx = _join_all(parts)
    if validate:
        from mfbounds.homology import classify

        cl = classify(cx, i)
        if not (cl.in_HS and cl.d == d and cl.n == n):
            raise ConstructionError(f"S({i},{d},{n}) failed its membership check: {cl}")
    return cx


# -- MPW coefficients -------------------------------------------------------

def mpw_closed_form(k: int, d: int) -> tuple[int, int]:
    """``(a_{k,d}, b_{k,d})`` with ``f_k(S(1,d,n)) = a n - b``."""
    s = binomial(d - 1, k) + binomial(d, k)
    a = 2 ** (k - 1) * s if k >= 1 else 1
    b = 2 ** k * ((d + 1) * s - 2 * binomial(d + 1, k + 1)) if k >= 1 else 0
    return a, b


def mpw_count_formula(k: int, d: int, n: int) -> int:
    """Face count of ``(d-1)`` copies of ``∂σ^1`` joined with an
    ``m``-cycle, ``m = n - 2(d-1)``, choosing k+1 vertices from the two parts."""
    m = n - 2 * (d - 1)
    return (
        binomial(d - 1, k + 1) * 2 ** (k + 1)
        + binomial(d - 1, k) * 2 ** k * m
        + binomial(d - 1, k - 1) * 2 ** (k - 1) * m
    )


@dataclass
class MPWCoefficients:
    k_max: int
    d_max: int
    a: dict[tuple[int, int], int] = field(default_factory=dict)
    b: dict[tuple[int, int], int] = field(default_factory=dict)

    def predict(self, k: int, d: int, n: int) -> int:
        return self.a[k, d] * n - self.b[k, d]


def mpw_coefficients(k_max: int, d_max: int) -> MPWCoefficients:
    """Fill ``a_{k,d}``, ``b_{k,d}`` for ``1 <= k <= d`` by the recurrences

        (k+1) a_{k,d} = 2(2d-1) a_{k-1,d-1} - b_{k-1,d-1}
        (k+1) b_{k,d} = 4(d+1)(d-1) a_{k-1,d-1}

    from ``a_{1,d} = 2d-1``, ``b_{1,d} = 2(d+1)(d-1)``, and compare with the
    closed forms for ``1 <= k < d``.
    """
    if k_max < 1 or d_max < 1:
        raise BadParams("k_max and d_max must be positive")
    tab = MPWCoefficients(k_max, d_max)
    for d in range(1, d_max + 1):
        tab.a[1, d] = 2 * d - 1
        tab.b[1, d] = 2 * (d + 1) * (d - 1)
    for k in range(2, k_max + 1):
        for d in range(k, d_max + 1):
            a_prev, b_prev = tab.a[k - 1, d - 1], tab.b[k - 1, d - 1]
            num_a = 2 * (2 * d - 1) * a_prev - b_prev
            num_b = 4 * (d + 1) * (d - 1) * a_prev
            if num_a % (k + 1) or num_b % (k + 1):
                raise RecurrenceClosedFormMismatch(f"non-integral coefficient at k={k}, d={d}")
            tab.a[k, d] = num_a // (k + 1)
            tab.b[k, d] = num_b // (k + 1)
    for (k, d), a in tab.a.items():
        if 1 <= k < d and (a, tab.b[k, d]) != mpw_closed_form(k, d):
            raise RecurrenceClosedFormMismatch(
                f"k={k}, d={d}: recurrence {(a, tab.b[k, d])} vs closed form {mpw_closed_form(k, d)}"
            )
    return tab


def mpw_validate_against_complexes(tab: MPWCoefficients, d_max: int, n_max: int) -> list[tuple]:
    """Compare ``a n - b`` with face counts of constructed ``S(1,d,n)``, all k.

    Returns ``(k, d, n, predicted, counted)`` rows; ``n`` starts at the
    crosspolytope size ``2d + 2``.
    """
    rows = []
    for d in range(1, min(d_max, tab.d_max) + 1):
        for n in range(2 * d + 2, n_max + 1):
            f = f_vector(construct_S_idn(1, d, n, validate=False))
            for k in range(1, min(d, tab.k_max) + 1):
                rows.append((k, d, n, tab.predict(k, d, n), f.f(k)))
    return rows

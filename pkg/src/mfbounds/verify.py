"""Verification reports for the face-number lower bounds and the open statements around them.

Every check records the exact integers it compared. A check is either a
proven statement (``proven=True``; a failure means a bug in this package)
or a conjecture (a failure would be a potential counterexample).
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from mfbounds import kernels
from mfbounds.complex import (
    SimplicialComplex,
    antistar,
    contract_edge,
    in_induced_4cycle,
    f_vector,
    from_facets,
    link,
    max_missing_dim,
    subdivide_edge,
)
from mfbounds.constructions import (
    construct_S,
    construct_S_idn,
    crosspolytope,
    mpw_coefficients,
    mpw_validate_against_complexes,
)
from mfbounds.errors import BadParams, NotInFamily, ScaleGuard
from mfbounds.homology import (
    alexander_duality_table,
    is_homology_sphere,
    reduced_homology,
    top_homology_nonzero,
)
from mfbounds.isomorphism import canonical_form, is_isomorphic
from mfbounds.polyvec import f_to_h, g_expand, hierarchy_expand, join_expand, pair_identity_residual, qr

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


@dataclass
class Check:
    name: str
    status: str
    proven: bool
    witness: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str | None:
        if self.status != FAILS:
            return None
        return "implementation-bug" if self.proven else "potential-counterexample"

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "status": self.status,
            "proven": self.proven,
            "witness": self.witness,
        }
        if self.verdict:
            out["verdict"] = self.verdict
        return out


@dataclass
class VerificationReport:
    subject: dict
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool | None, proven: bool, **witness) -> Check:
        status = NOT_APPLICABLE if ok is None else (HOLDS if ok else FAILS)
        chk = Check(name, status, proven, witness)
        self.checks.append(chk)
        return chk

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def proven_failures(self) -> list[Check]:
        return [c for c in self.checks if c.proven and c.status == FAILS]

    @property
    def ok(self) -> bool:
        return not self.proven_failures

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"subject": self.subject, "checks": [c.to_dict() for c in self.checks]}


def _ie(i: int, d: int) -> int:
    # C(i,d) = C(d+1,d) for i > d+1
    return min(i, d + 1)


def in_C(cx: SimplicialComplex, i: int) -> bool:
    return cx.dim >= 0 and max_missing_dim(cx) <= i and top_homology_nonzero(cx)


def in_HS(cx: SimplicialComplex, i: int) -> bool:
    return cx.dim >= 0 and max_missing_dim(cx) <= i and is_homology_sphere(cx)


def _subject(cx: SimplicialComplex, i: int, name: str | None = None) -> dict:
    return {"complex": name or "input", "i": i, "d": cx.dim, "n": cx.n}


def _guarantee(j: int, i: int, d: int) -> str | None:
    """Which proven case covers ``f_j >= f_j(S(i,d))``; None if open."""
    q, r = qr(d, i)
    if (d + 1) % i == 0:
        return "i-divides-d+1"
    if j == 0:
        return "vertex-count"
    if 1 <= j <= r:
        return "j-at-most-r"
    return None


def check_lower_bounds(cx: SimplicialComplex, i: int, name: str | None = None) -> VerificationReport:
    """Compare ``f_j(cx)`` with ``f_j(S(i,d))`` for every j.

    Each check's witness names the proven case covering it, or ``open``.
    When all face numbers agree, isomorphism with S(i,d) is tested.
    """
    if not in_C(cx, i):
        raise NotInFamily(f"complex is not in C({i},{cx.dim})")
    d = cx.dim
    ie = _ie(i, d)
    f = f_vector(cx)
    fs = f_vector(construct_S(ie, d))
    rep = VerificationReport(_subject(cx, i, name))
    for j in range(0, d + 1):
        part = _guarantee(j, ie, d)
        rep.add(f"f_{j} >= f_{j}(S({ie},{d}))", f.f(j) >= fs.f(j), part is not None,
                j=j, f=f.f(j), bound=fs.f(j), margin=f.f(j) - fs.f(j), guarantee=part or "open")
    equal = all(f.f(j) == fs.f(j) for j in range(d + 1))
    divides = (d + 1) % ie == 0
    if equal:
        iso = is_isomorphic(cx, construct_S(ie, d))
        rep.add(f"equality forces S({ie},{d})", iso, divides, isomorphic=iso,
                guarantee="i-divides-d+1" if divides else "open")
    else:
        rep.add(f"equality forces S({ie},{d})", None, divides,
                reason="not all face numbers are equal")
    return rep


def equality_margins(cx: SimplicialComplex, i: int) -> list[int]:
    """``f_j(cx) - f_j(S(i,d,n))`` for ``j = 0..d``."""
    d = cx.dim
    fs = f_vector(construct_S_idn(_ie(i, d), d, cx.n))
    f = f_vector(cx)
    return [f.f(j) - fs.f(j) for j in range(d + 1)]


def check_conjecture_1_3(cx: SimplicialComplex, i: int, name: str | None = None) -> VerificationReport:
    if not in_HS(cx, i):
        raise NotInFamily(f"complex is not in HS({i},{cx.dim},{cx.n})")
    d = cx.dim
    ie = _ie(i, d)
    margins = equality_margins(cx, i)
    f = f_vector(cx)
    rep = VerificationReport(_subject(cx, i, name))
    for j, m in enumerate(margins):
        rep.add(f"f_{j} >= f_{j}(S({ie},{d},{cx.n}))", m >= 0, False,
                j=j, f=f.f(j), bound=f.f(j) - m, margin=m)
    return rep


def check_conjecture_1_4(cx: SimplicialComplex, i: int, name: str | None = None) -> VerificationReport:
    if not in_HS(cx, i):
        raise NotInFamily(f"complex is not in HS({i},{cx.dim},{cx.n})")
    d = cx.dim
    ie = _ie(i, d)
    g = g_expand(f_to_h(f_vector(cx)), d, ie)
    rep = VerificationReport(_subject(cx, i, name))
    negative = [j for j, x in enumerate(g) if x < 0]
    rep.add(f"g^({ie}) >= 0", not negative, False, g=list(g), negative_at=negative)
    gs = g_expand(f_to_h(f_vector(construct_S_idn(ie, d, cx.n))), d, ie)
    rep.add(f"g^({ie})_j(S({ie},{d},{cx.n})) = 0 for j >= 2", all(x == 0 for x in gs[2:]), True,
            g_extremal=list(gs))
    margins = equality_margins(cx, i)
    if negative:
        rep.add("g >= 0 implies f >= f(S(i,d,n))", None, True, reason="g has negative entries")
    else:
        rep.add("g >= 0 implies f >= f(S(i,d,n))", all(m >= 0 for m in margins), True, margins=margins)
    return rep


def conjectures_agree(cx: SimplicialComplex, i: int) -> bool:
    """Whether the f-vector and g-vector conjecture checks reach the same verdict."""
    a = check_conjecture_1_3(cx, i).checks
    b = check_conjecture_1_4(cx, i).checks[0]
    return all(c.status == HOLDS for c in a) == (b.status == HOLDS)


def verify_recurrence(i_max: int, d_max: int) -> VerificationReport:
    """``f_j(S(i,d)) = f_j(S(i,d-1)) + f_{j-1}(S(i,d-1)) + f_{j-r}(S(i,d-r))``
    for ``1 <= i <= min(i_max, d+1)``, ``0 <= d <= d_max``, ``-1 <= j <= d+1``."""
    if i_max < 1 or d_max < 1:
        raise BadParams("bounds must be at least 1")
    rep = VerificationReport({"check": "recurrence", "i_max": i_max, "d_max": d_max})
    cache: dict[tuple[int, int], object] = {}

    def fv(i, d):
        key = (min(i, d + 1), d) if d >= 0 else (1, -1)
        if key not in cache:
            cache[key] = f_vector(construct_S(*key))
        return cache[key]

    for d in range(0, d_max + 1):
        for i in range(1, min(i_max, d + 1) + 1):
            _, r = qr(d, i)
            a, b, c = fv(i, d), fv(i, d - 1), fv(i, d - r)
            bad = []
            for j in range(-1, d + 2):
                lhs = a.f(j)
                rhs = b.f(j) + b.f(j - 1) + c.f(j - r)
                if lhs != rhs:
                    bad.append({"j": j, "lhs": lhs, "rhs": rhs})
            rep.add(f"recurrence: S({i},{d})", not bad, True, i=i, d=d, r=r,
                    f=list(a), mismatches=bad)
    return rep


def verify_mpw(k_max: int, d_max: int, n_max: int = 12) -> VerificationReport:
    """Recurrence/closed-form agreement for the MPW constants and the
    identity ``f_k(S(1,d,n)) = a_{k,d} n - b_{k,d}`` on built complexes."""
    rep = VerificationReport({"check": "mpw", "k_max": k_max, "d_max": d_max, "n_max": n_max})
    tab = mpw_coefficients(k_max, d_max)  # raises on closed-form mismatch
    rep.add("mpw: recurrence matches closed form (1 <= k < d)", True, True,
            a={f"{k},{d}": v for (k, d), v in sorted(tab.a.items())},
            b={f"{k},{d}": v for (k, d), v in sorted(tab.b.items())})
    rows = mpw_validate_against_complexes(tab, min(d_max, 5), n_max)
    bad = [r for r in rows if r[3] != r[4]]
    rep.add("mpw: f_k(S(1,d,n)) = a n - b on constructed complexes", not bad, True,
            compared=len(rows), mismatches=[list(r) for r in bad])
    return rep


# -- exhaustive enumeration -------------------------------------------------

DEFAULT_LIMITS = {1: 8, 2: 6}


def _scan_chunk(args):
    n, d, i, lo, hi = args
    masks = kernels.scan_complexes(n, d, i, lo, hi)
    return masks, kernels.scan_face_numbers(n, d, masks)


def _scan(d: int, n_max: int, i: int, workers: int, chunks: int) -> tuple[list, list, list]:
    tops = list(combinations(range(1, n_max + 1), d + 1))
    total = 1 << len(tops)
    step = -(-total // chunks)
    jobs = [(n_max, d, i, lo, min(lo + step, total)) for lo in range(0, total, step)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan_chunk, jobs))
    else:
        parts = [_scan_chunk(job) for job in jobs]
    masks = [m for part in parts for m in part[0]]
    fvs = [f for part in parts for f in part[1]]
    return tops, masks, fvs


def _spanned(tops, s: int) -> SimplicialComplex:
    return from_facets([list(t) for k, t in enumerate(tops) if (s >> k) & 1])


def scan_members(d: int, n_max: int, i: int, workers: int = 1, chunks: int = 16,
                 face_numbers: Sequence[int] | None = None) -> list[SimplicialComplex]:
    """All labelled members of C(i,d) on vertex labels ``1..n_max`` whose
    (d-1)-skeleton is the closure of their d-faces, optionally only those
    with ``(f_0, ..., f_d)`` equal to ``face_numbers``."""
    tops, masks, fvs = _scan(d, n_max, i, workers, chunks)
    want = None if face_numbers is None else tuple(face_numbers)
    return [_spanned(tops, s) for s, f in zip(masks, fvs) if want is None or tuple(f) == want]


def enumerate_and_verify(d: int, n_max: int, i: int, override: bool = False,
                         workers: int = 1, chunks: int = 16) -> VerificationReport:
    """Exhaustively check ``f_j >= f_j(S(i,d))`` and minimizer uniqueness on
    every labelled d-complex in C(i,d) with at most ``n_max`` vertices.

    Only d-complexes whose lower skeleton is spanned by their d-faces are
    generated. Extra lower faces only raise face numbers and can only add
    missing faces, so the minimizers are the same; see
    :func:`unreduced_minimizers` for the cross-check.
    """
    if d not in DEFAULT_LIMITS:
        raise BadParams("enumeration supports d = 1 and d = 2")
    if n_max > DEFAULT_LIMITS[d] and not override:
        raise ScaleGuard(f"d={d} enumeration is limited to n <= {DEFAULT_LIMITS[d]} without override")
    if i < 1 or n_max < d + 1:
        raise BadParams("need i >= 1 and n_max >= d + 1")
    ie = _ie(i, d)
    tops, masks, fvs = _scan(d, n_max, i, workers, chunks)
    S = construct_S(ie, d)
    fs = tuple(f_vector(S).without_empty())
    rep = VerificationReport({"check": "enumeration", "d": d, "n_max": n_max, "i": i,
                              "backend": kernels.BACKEND})
    minimum = [min((f[j] for f in fvs), default=None) for j in range(d + 1)]
    for j in range(d + 1):
        part = _guarantee(j, ie, d)
        viol = sum(1 for f in fvs if f[j] < fs[j])
        rep.add(f"f_{j} >= {fs[j]} over all members", viol == 0, part is not None,
                j=j, bound=fs[j], minimum=minimum[j], violations=viol, guarantee=part or "open")
    minimizers = [_spanned(tops, s) for s, f in zip(masks, fvs) if f == fs]
    classes = {canonical_form(cx) for cx in minimizers}
    unique = len(classes) == 1 and canonical_form(S) in classes
    divides = (d + 1) % ie == 0
    rep.add(f"minimizers are S({ie},{d})", unique if minimizers else None, divides,
            members=len(masks), minimizers=len(minimizers), minimizer_classes=len(classes),
            minimum_f=minimum, extremal_f=list(fs))
    return rep


def unreduced_minimizers(n_max: int, i: int) -> tuple[list[int] | None, int]:
    """Minimum f-vector over C(i,2) on ``n_max`` labels when 2-complexes may
    carry edges outside their triangles, and the number of minimizers.

    Independent of the scan kernels: membership uses :func:`missing_faces`
    and Smith normal form. Meant for ``n_max <= 5``.
    """
    verts = range(1, n_max + 1)
    tri = list(combinations(verts, 3))
    edges = list(combinations(verts, 2))
    best: list[int] | None = None
    count = 0
    for s in range(1, 1 << len(tri)):
        chosen = [t for k, t in enumerate(tri) if (s >> k) & 1]
        base = from_facets([list(t) for t in chosen])
        if not top_homology_nonzero(base):
            continue
        covered = {e for t in chosen for e in combinations(t, 2)}
        free = [e for e in edges if e not in covered]
        for x in range(1 << len(free)):
            extra = [list(e) for k, e in enumerate(free) if (x >> k) & 1]
            cx = from_facets([list(t) for t in chosen] + extra)
            if max_missing_dim(cx) > i:
                continue
            f = list(f_vector(cx))
            if best is None or f < best:
                best, count = f, 1
            elif f == best:
                count += 1
    return best, count


# -- antistar/link implication ----------------------------------------------

def lemma_2_2_property_scan(family: Iterable[SimplicialComplex], i: int) -> VerificationReport:
    """For every face ``F`` with ``|F| <= i+1``: if ``H̃_d(antistar F) = 0``
    then ``H̃_{d-|F|}(lk F) ≠ 0``."""
    rep = VerificationReport({"check": "antistar-link", "i": i})
    for idx, cx in enumerate(family):
        if not in_C(cx, i):
            raise NotInFamily(f"family member {idx} is not in C({i},{cx.dim})")
        d = cx.dim
        tested = triggered = 0
        bad = []
        for face in cx.all_faces():
            if not 1 <= len(face) <= i + 1:
                continue
            tested += 1
            if not reduced_homology(antistar(cx, face)).is_zero_at(d):
                continue
            triggered += 1
            if reduced_homology(link(cx, face)).is_zero_at(d - len(face)):
                bad.append(list(face))
        rep.add(f"antistar-link: member {idx}", not bad, True, d=d, n=cx.n, faces_tested=tested,
                antecedent_true=triggered, counterexamples=bad)
    return rep


# -- Alexander duality ------------------------------------------------------

def duality_report(cx: SimplicialComplex, name: str | None = None) -> VerificationReport:
    rows = alexander_duality_table(cx)
    rep = VerificationReport({"complex": name or "input", "n": cx.n, "d": cx.dim})
    rep.add("alexander duality: H_j(cx) = H^{n-j-3}(Gamma)", all(r.agrees for r in rows), True,
            rows=[{"j": r.j, "homology": [r.homology[0], list(r.homology[1])],
                   "cohomology_degree": r.cohomology_degree,
                   "cohomology": [r.cohomology[0], list(r.cohomology[1])]} for r in rows])
    return rep


# -- polynomial identities --------------------------------------------------

def verify_expansions(d_max: int = 11, d2_max: int = 8) -> VerificationReport:
    """Pair identity and nonnegativity of the hierarchy and join expansions;
    each expansion already asserts exact reconstruction."""
    rep = VerificationReport({"check": "expansions", "d_max": d_max, "d2_max": d2_max})
    bad = [(a, b) for a in range(1, 13) for b in range(1, a + 1)
           if not pair_identity_residual(a, b).is_zero()]
    rep.add("pair identity [b][a] = [b-1][a+1] + t^b[a-b]", not bad, True, failures=bad)
    neg = []
    for d in range(0, d_max + 1):
        for i in range(1, d + 1):
            if min(hierarchy_expand(d, i)) < 0:
                neg.append([d, i])
    rep.add("hierarchy: P_{d,i} >= 0 in B_{d,i+1}", not neg, True, negative=neg)
    neg = []
    for i in range(1, d_max + 1):
        for d in range(0, d2_max + 1):
            for d2 in range(0, d2_max + 1):
                if min(join_expand(d, d2, i)) < 0:
                    neg.append([d, d2, i])
    rep.add("join: P_{d,i} P_{d',i} >= 0 in B_{d+d'+1,i}", not neg, True, negative=neg)
    return rep


# -- HS(2,4) inequalities ---------------------------------------------------

LEMMA_SLOPE = 5 + Fraction(6, 91)


def hs24_predicates(cx: SimplicialComplex) -> VerificationReport:
    """``f_1 >= 6 f_0 - 21`` (open) and ``f_1 >= (5 + 6/91) f_0 - 15`` (lemma),
    reported for members of HS(2,4)."""
    rep = VerificationReport(_subject(cx, 2, None))
    member = cx.dim == 4 and in_HS(cx, 2)
    f0, f1 = f_vector(cx).f(0), f_vector(cx).f(1)
    if not member:
        rep.add("HS(2,4): f_1 >= 6 f_0 - 21", None, False, reason="not in HS(2,4)")
        rep.add("HS(2,4) lemma: f_1 >= (5 + 6/91) f_0 - 15", None, True, reason="not in HS(2,4)")
        return rep
    rep.add("HS(2,4): f_1 >= 6 f_0 - 21", f1 >= 6 * f0 - 21, False, f0=f0, f1=f1, bound=6 * f0 - 21)
    bound = LEMMA_SLOPE * f0 - 15
    rep.add("HS(2,4) lemma: f_1 >= (5 + 6/91) f_0 - 15", f1 >= bound, True, f0=f0, f1=f1,
            bound=str(bound))
    return rep


# -- equality families ------------------------------------------------------

def subdivided_octahedron(n: int) -> SimplicialComplex:
    """Octahedron with ``n - 6`` edge subdivisions, always on the
    lexicographically first edge."""
    if n < 6:
        raise BadParams("need n >= 6")
    cx = construct_S(1, 2)
    while cx.n < n:
        cx = subdivide_edge(cx, cx.faces(1)[0])
    return cx


def contraction_gap(cx: SimplicialComplex, e) -> VerificationReport:
    """Contract edge ``e`` of a flag homology sphere and compare the gaps
    ``f_j - f_j(S(1,d,f_0))`` before and after.

    The identity is claimed when ``lk(e)`` is the boundary of a
    crosspolytope and ``e`` lies on no induced 4-cycle; otherwise the check
    is not applicable.
    """
    if not in_HS(cx, 1):
        raise NotInFamily("contraction gap needs a flag homology sphere")
    d = cx.dim
    rep = VerificationReport({**_subject(cx, 1), "edge": list(e)})
    name = "contraction preserves f_j - f_j(S(1,d,f_0))"
    octahedral = d >= 2 and is_isomorphic(link(cx, e), crosspolytope(d - 2))
    if not octahedral or in_induced_4cycle(cx, e):
        rep.add(name, None, True, octahedral_link=octahedral, reason="precondition fails")
        return rep
    before = equality_margins(cx, 1)
    after = equality_margins(contract_edge(cx, e, check="both"), 1)
    rep.add(name, before == after, True, before=before, after=after)
    return rep

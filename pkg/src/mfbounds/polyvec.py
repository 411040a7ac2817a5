"""Exact f/h transforms and expansions in the bases B_{d,i}.

Polynomials are dense coefficient tuples, constant term first. ``[k]``
below is shorthand for ``1 + t + ... + t^k``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from mfbounds.errors import BadParams, DegreeTooHigh, NotSymmetric


@lru_cache(maxsize=None)
def _pascal_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _pascal_row(n - 1)
    return (1,) + tuple(prev[k - 1] + prev[k] for k in range(1, n)) + (1,)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient from Pascal's rule; zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _pascal_row(n)[k]


@dataclass(frozen=True)
class SymPoly:
    """Univariate polynomial with exact (int or Fraction) coefficients."""

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, coeffs: Iterable) -> "SymPoly":
        return cls(tuple(coeffs))

    @classmethod
    def ones(cls, k: int) -> "SymPoly":
        """``1 + t + ... + t^k`` (the constant 1 for ``k = 0``)."""
        return cls((1,) * (k + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "SymPoly") -> "SymPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return SymPoly(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return SymPoly(tuple(self[k] - other[k] for k in range(n)))

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            return SymPoly(tuple(other * c for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return SymPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return SymPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SymPoly":
        out = SymPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int) -> "SymPoly":
        return SymPoly((0,) * k + self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_symmetric(self, m: int | None = None) -> bool:
        """``coeffs[k] == coeffs[m - k]`` for all k (m defaults to the degree)."""
        if m is None:
            m = self.degree
        if self.degree > m:
            return False
        return all(self[k] == self[m - k] for k in range(m + 1))

    def padded(self, length: int) -> tuple:
        return tuple(self[k] for k in range(length))


class HVector(tuple):
    """``(h_0, ..., h_{d+1})``."""

    def polynomial(self) -> SymPoly:
        return SymPoly(tuple(self))

    def is_symmetric(self) -> bool:
        return all(self[k] == self[len(self) - 1 - k] for k in range(len(self)))


def f_to_h(f: Sequence[int]) -> HVector:
    """h-vector of ``f = (f_{-1}, f_0, ..., f_d)`` via substitution ``x -> x - 1``."""
    if not f or f[0] != 1:
        raise BadParams("f-vector must start with f_{-1} = 1")
    n = len(f)  # d + 2
    h = []
    for k in range(n):
        h.append(sum((-1) ** (k - i) * binomial(n - 1 - i, k - i) * f[i] for i in range(k + 1)))
    return HVector(h)


def h_to_f(h: Sequence[int]):
    from mfbounds.complex import FVector

    n = len(h)
    return FVector(
        sum(binomial(n - 1 - i, k - i) * h[i] for i in range(k + 1)) for k in range(n)
    )


# -- P_{d,i} and B_{d,i} ----------------------------------------------------

def qr(d: int, i: int) -> tuple[int, int]:
    """The unique ``(q, r)`` with ``d + 1 = q*i + r`` and ``1 <= r <= i``."""
    if i < 1 or d < 0:
        raise BadParams("need i >= 1 and d >= 0")
    q = d // i
    return q, d + 1 - q * i


def _factors(d: int, i: int) -> list[int]:
    if d == -1:
        return []
    q, r = qr(d, i)
    return [i] * q + [r]


def _product(factors: Iterable[int], shift: int = 0) -> SymPoly:
    out = SymPoly((1,))
    for k in factors:
        out = out * SymPoly.ones(k)
    return out.shift(shift)


def P(d: int, i: int) -> SymPoly:
    """``[i]^q [r]`` with ``d + 1 = q i + r``, and ``P_{-1,i} = 1``."""
    if i < 1 or d < -1:
        raise BadParams("need i >= 1 and d >= -1")
    return _product(_factors(d, i))


def basis_B(d: int, i: int) -> list[SymPoly]:
    """``(P_{d,i}, t P_{d-2,i}, ..., t^m P_{d-2m,i})`` with ``m = (d+1)//2``."""
    if i < 1 or d < -1:
        raise BadParams("need i >= 1 and d >= -1")
    return [P(d - 2 * j, i).shift(j) for j in range((d + 1) // 2 + 1)]


class GVector(tuple):
    """Coefficients of an h-polynomial in ``B_{d,i}``; carries ``d`` and ``i``."""

    def __new__(cls, entries, d: int, i: int):
        obj = super().__new__(cls, entries)
        obj.d = d
        obj.i = i
        return obj

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self)


def g_expand(h, d: int, i: int) -> GVector:
    """Expand the symmetric polynomial ``h`` in ``B_{d,i}``.

    Element ``j`` of the basis is ``t^j`` times a polynomial with constant
    term 1, so after subtracting the first ``j`` elements the residual's
    ``t^j`` coefficient is ``g_j``.
    """
    poly = h if isinstance(h, SymPoly) else SymPoly(tuple(h))
    if poly.degree > d + 1:
        raise DegreeTooHigh(f"degree {poly.degree} exceeds d + 1 = {d + 1}")
    if not poly.is_symmetric(d + 1):
        raise NotSymmetric(f"{list(poly.padded(d + 2))} is not symmetric about {(d + 1) / 2}")
    residual = poly
    g = []
    for j, b in enumerate(basis_B(d, i)):
        c = residual[j]
        if isinstance(c, Fraction) and c.denominator == 1:
            c = c.numerator
        g.append(c)
        residual = residual - b * c
    if not residual.is_zero():
        raise AssertionError("basis expansion left a nonzero residual")
    return GVector(g, d, i)


def reconstruct(g: Sequence, d: int, i: int) -> SymPoly:
    out = SymPoly(())
    for c, b in zip(g, basis_B(d, i)):
        out = out + b * c
    return out


# -- pair-identity rewriting ----------------------------------------------

def pair_identity_residual(a: int, b: int) -> SymPoly:
    """``[b][a] - [b-1][a+1] - t^b [a-b]``; identically zero for ``0 < b <= a``."""
    if not 0 < b <= a:
        raise BadParams("need 0 < b <= a")
    lhs = SymPoly.ones(b) * SymPoly.ones(a)
    rhs = SymPoly.ones(b - 1) * SymPoly.ones(a + 1) + SymPoly.ones(a - b).shift(b)
    return lhs - rhs


State = tuple[int, tuple[int, ...]]  # (power of t, sorted factor degrees)


def _rewrite(start: list[int], pick: Callable[[tuple[int, ...]], tuple[int, int] | None]) -> Counter:
    """Apply ``[b][a] = [b-1][a+1] + t^b[a-b]`` until ``pick`` finds no pair.

    The lexicographically smallest summand is processed first; since the
    expansion in a basis is unique, the aggregated result does not depend on
    this order.
    """
    work: Counter = Counter({(0, tuple(sorted(k for k in start if k))): 1})
    done: Counter = Counter()
    while work:
        state = min(work)
        coef = work.pop(state)
        c, fs = state
        pair = pick(fs)
        if pair is None:
            done[state] += coef
            continue
        ib, ia = pair
        b, a = fs[ib], fs[ia]
        rest = [k for n, k in enumerate(fs) if n not in (ib, ia)]
        first = tuple(sorted(k for k in rest + [b - 1, a + 1] if k))
        second = tuple(sorted(k for k in rest + [a - b] if k))
        work[(c, first)] += coef
        work[(c + b, second)] += coef
    return done


def _collect(done: Counter, d: int, i: int, target: SymPoly) -> tuple[int, ...]:
    basis = basis_B(d, i)
    coeffs = [0] * len(basis)
    for (c, fs), coef in done.items():
        if _product(fs, c) != basis[c]:
            raise AssertionError(f"summand t^{c}{list(fs)} is not element {c} of B_{d},{i}")
        coeffs[c] += coef
    if any(x < 0 for x in coeffs) or reconstruct(coeffs, d, i) != target:
        raise AssertionError("expansion failed its reconstruction check")
    return tuple(coeffs)


def hierarchy_expand(d: int, i: int) -> tuple[int, ...]:
    """Nonnegative coefficients of ``P_{d,i}`` in ``B_{d,i+1}``.

    Pairs a factor ``[i]`` with the smallest other factor ``[b]``, ``b <= i``;
    every summand then keeps at most one factor of degree below ``i`` and
    ends as ``t^c [i+1]^{q'} [r']`` with ``r' <= i``.
    """
    if i < 1 or d < 0:
        raise BadParams("need i >= 1 and d >= 0")

    def pick(fs):
        for ia, a in enumerate(fs):
            if a == i:
                for ib, b in enumerate(fs):
                    if ib != ia and b <= i:
                        return ib, ia
                return None
        return None

    done = _rewrite(_factors(d, i), pick)
    return _collect(done, d, i + 1, P(d, i))


def join_expand(d: int, d2: int, i: int) -> tuple[int, ...]:
    """Nonnegative coefficients of ``P_{d,i} P_{d2,i}`` in ``B_{d+d2+1,i}``."""
    if i < 1 or d < 0 or d2 < 0:
        raise BadParams("need i >= 1 and d, d2 >= 0")
    fa, fb = _factors(d, i), _factors(d2, i)

    def pick(fs):
        small = [n for n, k in enumerate(fs) if k < i]
        if len(small) < 2:
            return None
        return small[0], small[1]

    if fa[-1] == i or fb[-1] == i:
        done = Counter({(0, tuple(sorted(fa + fb))): 1})
    else:
        done = _rewrite(fa + fb, pick)
    return _collect(done, d + d2 + 1, i, P(d, i) * P(d2, i))


def lift_g(g: Sequence[int], d: int, i: int) -> tuple[int, ...]:
    """Map coefficients in ``B_{d,i}`` to coefficients in ``B_{d,i+1}`` by
    expanding each basis element with :func:`hierarchy_expand`."""
    out = [0] * ((d + 1) // 2 + 1)
    for j, gj in enumerate(g):
        if not gj:
            continue
        sub = d - 2 * j
        parts = (1,) if sub == -1 else hierarchy_expand(sub, i)
        for k, c in enumerate(parts):
            out[j + k] += gj * c
    return tuple(out)

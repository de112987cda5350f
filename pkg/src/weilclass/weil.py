"""Weil candidates: the palindromic coefficient form, the exact Weil test,
real-root detection, and coefficient intervals for enumeration pruning.

A candidate (p, n, g, a_1..a_g) names the monic degree-2g polynomial

    t^2g + a_1 t^(2g-1) + ... + a_g t^g + a_(g-1) q t^(g-1) + ... + a_1 q^(g-1) t + q^g

with q = p^n.  It is a Weil polynomial exactly when every complex root has
absolute value sqrt(q), which is decided here with integer arithmetic only:
f is Weil iff its trace transform h (with f(t) = t^g h(t + q/t)) has all real
roots and none of their squares exceeds 4q.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .intpoly import (
    IntPoly,
    NEG_INF,
    POS_INF,
    ShapeError,
    div_exact,
    real_weil_transform,
    squarefree_part,
    sturm_count,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class WeilCandidate:
    """A (p, n, g, a_1..a_g) tuple naming a palindromic degree-2g polynomial."""

    p: int
    n: int
    g: int
    a: tuple

    def __post_init__(self):
        if not is_prime(self.p):
            raise ShapeError(f"{self.p} is not prime")
        if self.n < 1 or self.g < 1:
            raise ShapeError("need n >= 1 and g >= 1")
        a = tuple(int(x) for x in self.a)
        if len(a) != self.g:
            raise ShapeError(f"expected {self.g} coefficients, got {len(a)}")
        object.__setattr__(self, "a", a)

    @property
    def q(self) -> int:
        return self.p**self.n


def expand(c: WeilCandidate) -> IntPoly:
    """The degree-2g polynomial named by the candidate.

    >>> expand(WeilCandidate(7, 1, 1, (3,)))
    IntPoly('t^2 + 3t + 7')
    >>> expand(WeilCandidate(2, 2, 2, (1, 2)))
    IntPoly('t^4 + t^3 + 2t^2 + 4t + 16')
    """
    q = c.q
    g = c.g
    coeffs = [0] * (2 * g + 1)
    coeffs[2 * g] = 1
    coeffs[g] = c.a[g - 1]
    for i in range(1, g):
        coeffs[2 * g - i] = c.a[i - 1]
        coeffs[i] = c.a[i - 1] * q ** (g - i)
    coeffs[0] = q**g
    return IntPoly(tuple(coeffs))


def _square_root_transform(d: IntPoly) -> IntPoly:
    """Polynomial whose roots are the squares of the roots of d (up to sign)."""
    even = IntPoly(tuple(d.coeffs[0::2]))
    odd = IntPoly(tuple(d.coeffs[1::2]))
    y = IntPoly.of(0, 1)
    return even * even - y * odd * odd


def is_weil_poly(f: IntPoly, q: int) -> bool:
    """Exact Weil test for a monic even-degree polynomial satisfying the
    functional equation: all roots of the trace transform h must be real and
    lie in [-2 sqrt(q), 2 sqrt(q)].  Realness is a Sturm count on the
    squarefree part d of h; the interval condition avoids irrational endpoints
    by checking that the root-square transform of d has no root above 4q."""
    h = real_weil_transform(f, q)
    d = squarefree_part(h)
    if sturm_count(d, NEG_INF, POS_INF) != d.degree:
        return False
    e = _square_root_transform(d)
    return sturm_count(e, 4 * q, POS_INF) == 0


def is_weil(c: WeilCandidate) -> bool:
    """Whether all complex roots of expand(c) have absolute value sqrt(q).

    >>> is_weil(WeilCandidate(2, 1, 1, (-1,)))
    True
    >>> is_weil(WeilCandidate(2, 1, 1, (3,)))
    False
    """
    return is_weil_poly(expand(c), c.q)


@dataclass(frozen=True)
class SqrtQRootReport:
    """Multiplicities of the real roots of absolute value sqrt(q).

    For n even these are the rational roots +-p^(n/2) (fields ``plus`` and
    ``minus``); for n odd the conjugate pair +-sqrt(q) shows up as a power of
    the quadratic t^2 - q (field ``pair``).
    """

    plus: int = 0
    minus: int = 0
    pair: int = 0

    @property
    def total(self) -> int:
        return self.plus + self.minus + 2 * self.pair

    @property
    def has_root(self) -> bool:
        return self.total > 0


def _multiplicity(f: IntPoly, d: IntPoly) -> int:
    k = 0
    while True:
        quo = div_exact(f, d)
        if quo is None:
            return k
        f = quo
        k += 1


def real_sqrt_q_roots(c: WeilCandidate) -> SqrtQRootReport:
    """Which of +-sqrt(q) are roots of expand(c), and with what multiplicity.

    >>> real_sqrt_q_roots(WeilCandidate(2, 2, 1, (-4,)))
    SqrtQRootReport(plus=2, minus=0, pair=0)
    >>> real_sqrt_q_roots(WeilCandidate(3, 1, 2, (0, -6)))
    SqrtQRootReport(plus=0, minus=0, pair=2)
    """
    f = expand(c)
    if c.n % 2 == 0:
        r = c.p ** (c.n // 2)
        return SqrtQRootReport(
            plus=_multiplicity(f, IntPoly.of(-r, 1)),
            minus=_multiplicity(f, IntPoly.of(r, 1)),
        )
    return SqrtQRootReport(pair=_multiplicity(f, IntPoly.of(-c.q, 0, 1)))


# ---------------------------------------------------------------------------
# Coefficient intervals for enumeration pruning
# ---------------------------------------------------------------------------


def _isqrt_bound(m: int) -> int:
    """Largest integer whose square is <= m."""
    return isqrt(m)


def power_sums_from_prefix(a_prefix, k: int):
    """Power sums s_1..s_(k-1) of the roots, determined by a_1..a_(k-1) via
    Newton's identities for a monic polynomial."""
    s = []
    for j in range(1, k):
        acc = j * a_prefix[j - 1]
        for i in range(1, j):
            acc += a_prefix[i - 1] * s[j - i - 1]
        s.append(-acc)
    return s


def coefficient_interval(p: int, n: int, g: int, prefix, depth: int | None = None):
    """Integer interval [lo, hi] guaranteed to contain every a_k that extends
    the prefix (a_1..a_(k-1)) to a Weil tuple.  Sound, not necessarily tight.

    The baseline is the binomial bound |a_k| <= C(2g,k) q^(k/2).  For levels
    k <= depth (default: all levels) it is intersected with the power-sum
    interval from |s_k| <= 2g q^(k/2), with s_1..s_(k-1) pinned by the prefix.

    >>> coefficient_interval(5, 1, 1, ())
    (-4, 4)
    >>> coefficient_interval(2, 1, 5, ())
    (-14, 14)
    """
    prefix = tuple(prefix)
    k = len(prefix) + 1
    if k > g:
        raise ShapeError("prefix already has g coefficients")
    q = p**n
    base = _isqrt_bound(comb(2 * g, k) ** 2 * q**k)
    lo, hi = -base, base
    if depth is None:
        depth = g
    if k <= depth:
        s = power_sums_from_prefix(prefix, k)
        mixed = sum(prefix[i - 1] * s[k - i - 1] for i in range(1, k))
        m_k = _isqrt_bound(4 * g * g * q**k)
        # a_k = -(s_k + mixed)/k with |s_k| <= m_k
        lo2 = _ceil_div(-m_k - mixed, k)
        hi2 = _floor_div(m_k - mixed, k)
        lo = max(lo, lo2)
        hi = min(hi, hi2)
    return lo, hi


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)

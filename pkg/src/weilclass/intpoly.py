"""Exact univariate polynomials over Z: arithmetic, Sturm counting, factorization.

A polynomial is a dense tuple of arbitrary-precision integer coefficients in
ascending order, so ``IntPoly((1, 0, 2))`` is ``2t^2 + 1``.  All operations are
pure and exact; nothing here ever touches floating point.

>>> f = IntPoly.of(7, 3, 1)          # t^2 + 3t + 7
>>> f.degree
2
>>> f(2)
21
>>> (f * f).coeffs == (f**2).coeffs
True
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd, inf, isqrt

from . import _modp

NEG_INF = -inf
POS_INF = inf


class ShapeError(ValueError):
    """Input polynomial does not have the required shape (monicity, degree, ...)."""


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Immutable integer-coefficient polynomial, constant term first.

    >>> IntPoly.of(-1, 0, 1)
    IntPoly('t^2 - 1')
    >>> IntPoly.of(-1, 0, 1).derivative()
    IntPoly('2t')
    """

    coeffs: tuple[int, ...]

    @staticmethod
    def of(*coeffs: int) -> "IntPoly":
        return IntPoly(_trim(coeffs))

    @staticmethod
    def from_coeffs(coeffs) -> "IntPoly":
        return IntPoly(_trim(coeffs))

    @staticmethod
    def x_power(k: int, c: int = 1) -> "IntPoly":
        return IntPoly(_trim([0] * k + [c]))

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(_trim([self.coeff(i) + other.coeff(i) for i in range(n)]))

    def __sub__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(_trim([self.coeff(i) - other.coeff(i) for i in range(n)]))

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(_trim([other * c for c in self.coeffs]))
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(_trim(out))

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.of(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner; accepts int or Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(_trim([i * c for i, c in enumerate(self.coeffs)][1:]))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if self.is_zero:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coeffs))

    def shift_mul_x(self, k: int) -> "IntPoly":
        return IntPoly(_trim((0,) * k + self.coeffs))

    def __repr__(self):
        return f"IntPoly('{self}')"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else (" - " if parts else ("-" if c < 0 else ""))
            a = abs(c)
            if i == 0:
                term = str(a)
            else:
                var = "t" if i == 1 else f"t^{i}"
                term = var if a == 1 else f"{a}{var}"
            parts.append(sign + term)
        return "".join(parts)


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.of(x)
    raise TypeError(f"cannot treat {type(x).__name__} as IntPoly")


def div_exact(f: IntPoly, g: IntPoly):
    """Exact quotient f/g over Z, or None if g does not divide f in Z[t]."""
    if g.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero:
        return f
    r = list(f.coeffs)
    dg = g.degree
    glc = g.lc
    if f.degree < dg:
        return None
    q = [0] * (f.degree - dg + 1)
    for i in range(f.degree - dg, -1, -1):
        c = r[i + dg]
        if c % glc != 0:
            return None
        c //= glc
        q[i] = c
        if c:
            for j, b in enumerate(g.coeffs):
                r[i + j] -= c * b
    if any(r[:dg]):
        return None
    return IntPoly(_trim(q))


def _rational_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive integer representative (same sign) of the remainder of f by g over Q."""
    r = [Fraction(c) for c in f.coeffs]
    while len(r) - 1 >= g.degree and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < g.degree:
            break
        c = r[-1] / g.lc
        shift = len(r) - 1 - g.degree
        for j, b in enumerate(g.coeffs):
            r[shift + j] -= c * b
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    if not r:
        return IntPoly(())
    den = 1
    for c in r:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in r]
    g = 0
    for c in ints:
        g = int_gcd(g, c)
    return IntPoly(tuple(c // g for c in ints))


def gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[t] with positive leading coefficient."""
    if f.is_zero:
        return g.primitive()
    if g.is_zero:
        return f.primitive()
    a, b = f.primitive(), g.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        a, b = b, _rational_rem(a, b)
    return a.primitive()


def squarefree_part(f: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors of f (primitive, positive lc)."""
    if f.degree < 1:
        raise ShapeError("squarefree part needs degree >= 1")
    g = gcd(f, f.derivative())
    if g.degree == 0:
        return f.primitive()
    q = div_exact(f.primitive(), g)
    return q.primitive()


# ---------------------------------------------------------------------------
# The palindromic functional equation and the real Weil transform
# ---------------------------------------------------------------------------


def functional_equation_holds(f: IntPoly, q: int, g: int) -> bool:
    """True iff t^(2g) * f(q/t) == q^g * f(t), i.e. coefficients pair up as
    c_{2g-i} = q^(g-i) * c_i.  Requires f monic of degree 2g."""
    if not f.is_monic or f.degree != 2 * g:
        raise ShapeError("functional equation needs a monic polynomial of degree 2g")
    return all(f.coeff(i) == q ** (g - i) * f.coeff(2 * g - i) for i in range(g + 1))


def real_weil_transform(f: IntPoly, q: int) -> IntPoly:
    """The monic degree-g polynomial h with f(t) = t^g * h(t + q/t).

    Works by peeling leading terms: t^g * (t + q/t)^j = t^(g-j) (t^2+q)^j has
    leading term t^(g+j), so the coefficients of h are determined from the top
    down, exactly.  Raises ShapeError if f does not satisfy the functional
    equation (no such h exists).

    >>> real_weil_transform(IntPoly.of(4, 4, 5, 2, 1), 2)
    IntPoly('t^2 + 2t + 1')
    """
    if not f.is_monic or f.degree % 2 != 0 or f.degree < 2:
        raise ShapeError("transform needs a monic polynomial of even degree >= 2")
    g = f.degree // 2
    rem = f
    b = [0] * (g + 1)
    base = IntPoly.of(q, 0, 1)  # t^2 + q
    for j in range(g, -1, -1):
        b[j] = rem.coeff(g + j)
        if b[j]:
            rem = rem - (base**j).shift_mul_x(g - j) * b[j]
    if not rem.is_zero:
        raise ShapeError("polynomial does not satisfy the degree-2g functional equation")
    return IntPoly(_trim(b))


# ---------------------------------------------------------------------------
# Sturm sequences (exact, over Z, content-stripped)
# ---------------------------------------------------------------------------


def _sturm_chain(d: IntPoly):
    chain = [d, d.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        r = _rational_rem(chain[-2], chain[-1])
        if r.is_zero:
            break
        chain.append(-r)
    return [c for c in chain if not c.is_zero]


def sign_at(f: IntPoly, x) -> int:
    """Sign of f at x, where x is an int, Fraction, or +-inf."""
    if f.is_zero:
        return 0
    if x == POS_INF:
        return 1 if f.lc > 0 else -1
    if x == NEG_INF:
        s = f.lc * (-1) ** f.degree
        return 1 if s > 0 else -1
    if isinstance(x, Fraction):
        u, v = x.numerator, x.denominator
    else:
        u, v = int(x), 1
    # sign of sum c_j u^j v^(d-j), the v^d-scaled value: exact in Z
    total = 0
    pu = 1
    d = f.degree
    for j, c in enumerate(f.coeffs):
        total += c * pu * v ** (d - j)
        pu *= u
    return (total > 0) - (total < 0)


def _variations(signs) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sturm_count(h: IntPoly, lo=NEG_INF, hi=POS_INF) -> int:
    """Number of distinct real roots of h in the half-open interval (lo, hi].

    Endpoints are rationals or +-inf.  Repeated roots are counted once: the
    chain is built on the squarefree part, and zeros in a sign sequence are
    skipped, which gives exactly the (lo, hi] convention at root endpoints.

    >>> sturm_count(IntPoly.of(-2, 0, 1), -2, 2)
    2
    >>> sturm_count(IntPoly.of(0, -3, 0, 1), 0, 2)
    1
    """
    if h.is_zero:
        raise ShapeError("root counting needs a nonzero polynomial")
    if h.degree == 0:
        return 0
    d = squarefree_part(h)
    chain = _sturm_chain(d)
    v_lo = _variations([sign_at(c, lo) for c in chain])
    v_hi = _variations([sign_at(c, hi) for c in chain])
    return v_lo - v_hi


def count_real_roots(h: IntPoly) -> int:
    return sturm_count(h, NEG_INF, POS_INF)


# ---------------------------------------------------------------------------
# Factorization over Q (degree-set filter, then Hensel lifting + recombination)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """Outcome of a rational irreducibility test.

    status is "irreducible", "reducible", or "composite-of"; in the last case
    ``factors`` multiplies back to the input exactly.  ``certificate`` is a
    short human-readable description of the deciding route.
    """

    status: str
    factors: tuple = ()
    certificate: str = ""


def _primes_from(start):
    n = max(start, 2)
    while True:
        if all(n % p for p in range(2, isqrt(n) + 1)):
            yield n
        n += 1


def _good_primes(f: IntPoly, count: int, bound: int = 10000):
    """Primes p (not dividing lc) where f stays squarefree mod p."""
    found = []
    for p in _primes_from(2):
        if p > bound:
            raise ArithmeticError(f"no {count} good primes below {bound} for {f!r}")
        if f.lc % p == 0:
            continue
        fbar = _modp.trim(f.coeffs, p)
        if _modp.deg(fbar) != f.degree:
            continue
        der = _modp.derivative(fbar, p)
        if not der:
            continue
        if _modp.deg(_modp.gcd(fbar, der, p)) == 0:
            found.append(p)
            if len(found) == count:
                return found
    return found


def _degree_bitset(degrees) -> int:
    mask = 1
    for d in degrees:
        mask |= mask << d
    return mask


def _mignotte_bound(f: IntPoly) -> int:
    norm2 = isqrt(sum(c * c for c in f.coeffs)) + 1
    return (1 << f.degree) * norm2 * abs(f.lc)


def _factor_squarefree(f: IntPoly):
    """Irreducible factors of a primitive squarefree polynomial, degree >= 1.

    Degree sets modulo several good primes decide irreducibility almost always;
    otherwise one factorization is Hensel-lifted past the Mignotte bound and
    factors are recovered by subset recombination.  Returns (factors, route).
    """
    n = f.degree
    if n == 1:
        return [f], "degree-1"
    primes = _good_primes(f, 5)
    best = None
    mask = (1 << (n + 1)) - 1
    for p in primes:
        _, fac = _modp.factor(f.coeffs, p)
        degrees = [_modp.deg(g) for g, _ in fac]
        mask &= _degree_bitset(degrees)
        if best is None or len(degrees) < len(best[1]):
            best = (p, [g for g, _ in fac])
    if mask & ((1 << n) - 2) == 0:  # no possible factor degree in 1..n-1
        return [f], f"degree-set filter mod {primes}"
    if not f.is_monic:
        # monicize by scaling the variable: F(x) = lc^(n-1) f(x/lc) is monic
        # over Z with the same factorization shape; map factors back after
        lc = f.lc
        F = IntPoly(_trim([c * lc ** (n - 1 - j) for j, c in enumerate(f.coeffs[:-1])] + [1]))
        inner, route = _factor_squarefree(F)
        back = []
        for G in inner:
            back.append(IntPoly(_trim([b * lc**k for k, b in enumerate(G.coeffs)])).primitive())
        return back, route + " (after monicizing substitution)"
    p, modular = best
    bound = _mignotte_bound(f)
    target = 2 * bound + 1
    pk, lifted = _modp.hensel_lift(tuple(c for c in f.coeffs), modular, p, target)
    return _recombine(f, lifted, pk), f"Hensel lifting mod {p} to {p}^k >= {target} + recombination"


def _balanced(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _recombine(f: IntPoly, lifted, pk):
    """Zassenhaus subset recombination of the lifted modular factors."""
    factors = []
    pool = list(lifted)
    current = f
    size = 1
    while 2 * size <= len(pool):
        found = False
        for combo in itertools.combinations(range(len(pool)), size):
            prod = _modp.ONE
            for i in combo:
                prod = _modp.mul(prod, pool[i], pk)
            cand_coeffs = [_balanced(c * current.lc, pk) for c in prod]
            cand = IntPoly(_trim(cand_coeffs))
            if cand.degree < 1:
                continue
            cand = cand.primitive()
            quo = div_exact(current, cand)
            if quo is not None:
                factors.append(cand)
                current = quo.primitive()
                pool = [g for i, g in enumerate(pool) if i not in combo]
                found = True
                break
        if not found:
            size += 1
    if current.degree >= 1:
        factors.append(current.primitive())
    return factors


def factor_rational(f: IntPoly):
    """Complete factorization over Q.

    Returns (unit, content, [(g, multiplicity)]) where unit is +-1, content a
    positive integer, each g is primitive irreducible with positive leading
    coefficient, and f = unit * content * prod g^mult.  Factors are sorted by
    (degree, coefficients).
    """
    if f.is_zero:
        raise ShapeError("cannot factor the zero polynomial")
    unit = 1 if f.lc > 0 else -1
    content = abs(f.content()) if f.degree >= 0 else 1
    if f.degree == 0:
        return unit, content, []
    prim = f.primitive()
    out = []
    k = 0
    while prim.coeff(0) == 0:
        prim = IntPoly(prim.coeffs[1:])
        k += 1
    if k:
        out.append((IntPoly.of(0, 1), k))
    if prim.degree >= 1:
        sf = squarefree_part(prim)
        irre, _ = _factor_squarefree(sf)
        for u in irre:
            mult = 0
            r = prim
            while True:
                q = div_exact(r, u)
                if q is None:
                    break
                r = q
                mult += 1
            out.append((u, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return unit, content, out


def rational_irreducibility(f: IntPoly) -> IrreducibilityVerdict:
    """Certified irreducibility verdict over Q for a primitive polynomial.

    >>> rational_irreducibility(IntPoly.of(1, 1, 1)).status
    'irreducible'
    """
    if f.degree < 1:
        raise ShapeError("irreducibility needs degree >= 1")
    if abs(f.content()) != 1:
        raise ShapeError("input must be primitive (content 1)")
    sf = gcd(f, f.derivative())
    if sf.degree > 0:
        unit, _, fac = factor_rational(f)
        factors = []
        for g, m in fac:
            factors.extend([g] * m)
        return IrreducibilityVerdict("composite-of", tuple(factors), "repeated-factor split")
    if f.coeff(0) == 0 and f.degree > 1:
        unit, _, fac = factor_rational(f)
        factors = []
        for g, m in fac:
            factors.extend([g] * m)
        return IrreducibilityVerdict("composite-of", tuple(factors), "t divides the input")
    factors, route = _factor_squarefree(f.primitive())
    if len(factors) == 1:
        return IrreducibilityVerdict("irreducible", (f,), route)
    return IrreducibilityVerdict("composite-of", tuple(factors), route)

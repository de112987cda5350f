"""Dense univariate polynomial arithmetic over Z/m, and factorization over prime fields.

Polynomials are tuples of ints in [0, m), ascending powers, with no trailing
zeros; the zero polynomial is the empty tuple.  The same representation is used
both for prime moduli (field arithmetic, factorization) and for prime-power
moduli (Hensel lifting), so the caller is responsible for only dividing by
units of Z/m.
"""

from __future__ import annotations

import hashlib
import random

ZERO = ()
ONE = (1,)


def trim(coeffs, m):
    c = [x % m for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(f):
    return len(f) - 1


def add(f, g, m):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], m)


def sub(f, g, m):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], m)


def scale(f, c, m):
    return trim([c * x for x in f], m)


def mul(f, g, m):
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out, m)


def divmod_unit(f, g, m):
    """Quotient and remainder of f by g, where lc(g) is a unit of Z/m."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], -1, m)
    r = list(f)
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - dg - 1, -1, -1):
        if len(r) < i + dg + 1:
            continue
        c = (r[i + dg] * inv) % m
        if c:
            q[i] = c
            for j, b in enumerate(g):
                r[i + j] = (r[i + j] - c * b) % m
    return trim(q, m), trim(r[:dg], m)


def mod(f, g, m):
    return divmod_unit(f, g, m)[1]


def monic(f, m):
    if not f:
        return ZERO
    return scale(f, pow(f[-1], -1, m), m)


def gcd(f, g, p):
    """Monic gcd over the field Z/p."""
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def pow_mod(f, e, h, p):
    """f^e modulo the polynomial h, over Z/p."""
    result = ONE
    f = mod(f, h, p)
    while e:
        if e & 1:
            result = mod(mul(result, f, p), h, p)
        f = mod(mul(f, f, p), h, p)
        e >>= 1
    return result


def derivative(f, m):
    return trim([i * f[i] for i in range(1, len(f))], m)


X = (0, 1)


def _pth_root(f, p):
    """Given f = g(x^p) over F_p, return g.  Uses c^(1/p) = c on F_p."""
    return trim([f[i] for i in range(0, len(f), p)], p)


def squarefree_decomposition(f, p):
    """Yun-type squarefree decomposition over F_p.

    Returns a list of (g, k) with g monic squarefree, the g pairwise coprime,
    and f = lc * prod g^k.
    """
    out = []
    f = monic(f, p)

    def _sqf(f, outer):
        # standard recursion: split off the derivative-visible part, then
        # recurse on the p-th power part
        d = derivative(f, p)
        if not d:
            g = _pth_root(f, p)
            _sqf(g, outer * p)
            return
        c = gcd(f, d, p)
        w = divmod_unit(f, c, p)[0]
        k = 1
        while deg(w) > 0:
            y = gcd(w, c, p)
            z = divmod_unit(w, y, p)[0]
            if deg(z) > 0:
                out.append((z, k * outer))
            w = y
            c = divmod_unit(c, y, p)[0]
            k += 1
        if deg(c) > 0:
            g = _pth_root(c, p)
            _sqf(g, outer * p)

    _sqf(f, 1)
    return out


def distinct_degree(f, p):
    """Split monic squarefree f over F_p into [(product of irreducibles of degree d, d)]."""
    out = []
    xq = pow_mod(X, p, f, p)  # x^(p^1) mod f
    d = 0
    acc = xq
    while deg(f) > 0:
        d += 1
        if 2 * d > deg(f):
            out.append((f, deg(f)))
            break
        g = gcd(sub(acc, X, p), f, p)
        if deg(g) > 0:
            out.append((g, d))
            f = divmod_unit(f, g, p)[0]
            acc = mod(acc, f, p)
        acc = pow_mod(acc, p, f, p)
    return out


def _random_poly(rng, max_deg, p):
    c = [rng.randrange(p) for _ in range(max_deg + 1)]
    return trim(c, p)


def equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of monic squarefree f, all of whose irreducible
    factors have degree d, into the list of those factors."""
    n = deg(f)
    if n == d:
        return [f]
    factors = [f]
    done = []
    while factors:
        h = factors.pop()
        if deg(h) == d:
            done.append(h)
            continue
        g = _split_attempt(h, d, p, rng)
        while g is None or deg(g) == 0 or deg(g) == deg(h):
            g = _split_attempt(h, d, p, rng)
        factors.append(g)
        factors.append(divmod_unit(h, g, p)[0])
    return done


def _split_attempt(h, d, p, rng):
    a = _random_poly(rng, deg(h) - 1, p)
    if deg(a) < 1:
        return None
    if p == 2:
        # trace map over F_2: a + a^2 + ... + a^(2^(d-1))
        t = a
        acc = a
        for _ in range(d - 1):
            acc = mod(mul(acc, acc, p), h, p)
            t = add(t, acc, p)
        g = gcd(t, h, p)
    else:
        e = (p**d - 1) // 2
        b = pow_mod(a, e, h, p)
        g = gcd(sub(b, ONE, p), h, p)
    return g


def _rng_for(f, p, salt=b"edf"):
    digest = hashlib.sha256(repr((tuple(f), p)).encode() + salt).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def factor(f, p, rng=None):
    """Complete factorization of f over F_p.

    Returns (lc, [(g, multiplicity)]) with the g monic irreducible, sorted.
    The equal-degree stage is randomized; by default the generator is seeded
    from (f, p) so output is deterministic.
    """
    f = trim(f, p)
    if deg(f) < 1:
        return (f[0] if f else 0), []
    if rng is None:
        rng = _rng_for(f, p)
    lc = f[-1]
    out = []
    for g, k in squarefree_decomposition(f, p):
        for h, d in distinct_degree(g, p):
            for irr in equal_degree(h, d, p, rng):
                out.append((irr, k))
    out.sort()
    return lc, out


def is_irreducible(f, p):
    """Irreducibility over F_p via the distinct-degree sieve."""
    f = monic(trim(f, p), p)
    n = deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    if deg(gcd(f, derivative(f, p), p)) > 0:
        return False
    acc = pow_mod(X, p, f, p)
    for d in range(1, n // 2 + 1):
        if deg(gcd(sub(acc, X, p), f, p)) > 0:
            return False
        acc = pow_mod(acc, p, f, p)
    return True


# ---------------------------------------------------------------------------
# Hensel lifting (monic factorizations, quadratic multifactor lift)
# ---------------------------------------------------------------------------


def _xgcd_poly(a, b, p):
    """Extended gcd over F_p: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod_unit(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        raise ZeroDivisionError("xgcd of zero polynomials")
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m),
    with h monic, to the same data mod m^2.  All polynomials mod m^2."""
    mm = m * m
    e = sub(f, mul(g, h, mm), mm)
    q, r = divmod_unit(mul(s, e, mm), h, mm)
    g1 = add(g, add(mul(t, e, mm), mul(q, g, mm), mm), mm)
    h1 = add(h, r, mm)
    b = sub(add(mul(s, g1, mm), mul(t, h1, mm), mm), ONE, mm)
    c, d = divmod_unit(mul(s, b, mm), h1, mm)
    s1 = sub(s, d, mm)
    t1 = sub(sub(t, mul(t, b, mm), mm), mul(c, g1, mm), mm)
    return g1, h1, s1, t1


def hensel_lift(f, factors, p, target):
    """Lift the pairwise-coprime monic factorization f = prod(factors) (mod p)
    to modulus p^k >= target.  f must be monic mod p^k for all k (i.e. monic
    over Z).  Returns (p^k, lifted factors), in the same order."""
    if not factors:
        raise ValueError("empty factorization")
    if len(factors) == 1:
        k = 1
        q = p
        while q < target:
            q *= p
        return q, [trim(f, q)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = ONE
    for u in left:
        g = mul(g, u, p)
    h = ONE
    for u in right:
        h = mul(h, u, p)
    one, s, t = _xgcd_poly(g, h, p)
    if one != ONE:
        raise ValueError("factors are not pairwise coprime mod p")
    m = p
    while m < target:
        g, h, s, t = _hensel_step(trim(f, m * m), g, h, s, t, m)
        m *= m
    _, lifted_left = hensel_lift(g, left, p, target)
    _, lifted_right = hensel_lift(h, right, p, target)
    # sub-lifts run at their own modulus >= target; re-reduce to a common one
    q = p
    while q < target:
        q *= p
    return q, [trim(u, q) for u in lifted_left + lifted_right]

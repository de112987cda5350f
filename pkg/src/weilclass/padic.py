"""p-adic valuations, Newton polygons, and certified Q_p factor profiles.

A "profile" is the multiset of (degree, root valuation) pairs of the monic
irreducible factors of a polynomial over the p-adic field.  It is computed
exactly: the polynomial is split over Q first, and each rational-irreducible
piece is resolved through the p-maximal order of its root algebra, whose
residue algebra decomposes into one local block per p-adic factor.  Block
dimensions give the factor degrees and exact determinant valuations give the
root valuations; no floating point or heuristic precision is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf

from . import _linalg, _modp
from .intpoly import IntPoly, ShapeError, factor_rational

INF = inf


class CertificationError(RuntimeError):
    """A profile could not be certified within the configured precision cap."""


DEFAULT_PRECISION_CAP = 2**14


def vp(x: int, p: int):
    """p-adic valuation of an integer, with vp(0) = infinity.

    >>> vp(12, 2)
    2
    >>> vp(-250, 5)
    3
    >>> vp(0, 5)
    inf
    """
    if x == 0:
        return INF
    v = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        v += 1
    return v


def is_square_in_qp(d: int, p: int) -> bool:
    """Whether d is a square in the p-adic field: even valuation and square unit.

    >>> is_square_in_qp(-12, 2)
    False
    >>> is_square_in_qp(25, 5)
    True
    >>> is_square_in_qp(-4, 5)
    True
    """
    if d == 0:
        raise ValueError("square test needs d != 0")
    v = vp(d, p)
    if v % 2:
        return False
    u = d // p**v
    if p == 2:
        return u % 8 == 1
    return pow(u % p, (p - 1) // 2, p) == 1


# ---------------------------------------------------------------------------
# Newton polygons
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of the coefficient-valuation points of a polynomial.

    ``points`` lists (i, vp(coefficient of t^i)) for every i; ``vertices`` are
    the hull corners left to right; each segment is reported as (root
    valuation, horizontal length), so the valuation sequence is non-increasing
    left to right and the lengths sum to the degree.
    """

    p: int
    points: tuple
    vertices: tuple
    segments: tuple

    def slope_multiset(self) -> dict:
        """Map root valuation -> number of roots (with multiplicity)."""
        out: dict = {}
        for s, length in self.segments:
            out[s] = out.get(s, 0) + length
        return out


def newton_polygon(f: IntPoly, p: int) -> NewtonPolygon:
    """Newton polygon of f at p.  Rejects zero constant term.

    >>> np = newton_polygon(IntPoly.of(8, 2, 1), 2)
    >>> np.vertices
    ((0, 3), (1, 1), (2, 0))
    >>> np.segments
    ((Fraction(2, 1), 1), (Fraction(1, 1), 1))
    """
    if f.is_zero or f.coeff(0) == 0:
        raise ShapeError("Newton polygon needs a nonzero constant term")
    points = tuple((i, vp(c, p)) for i, c in enumerate(f.coeffs))
    finite = [(i, v) for i, v in points if v != INF]
    hull = []
    for pt in finite:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            x3, y3 = pt
            # drop the middle point when it is not strictly below chord
            if (y2 - y1) * (x3 - x2) >= (y3 - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segments.append((Fraction(y1 - y2, x2 - x1), x2 - x1))
    return NewtonPolygon(p=p, points=points, vertices=tuple(hull), segments=tuple(segments))


def vertex_lattice_check(polygon: NewtonPolygon, n: int) -> bool:
    """True iff every hull vertex height is a multiple of n."""
    return all(v % n == 0 for _, v in polygon.vertices)


# ---------------------------------------------------------------------------
# Factorization over the prime field
# ---------------------------------------------------------------------------


def factor_mod_p(f: IntPoly, p: int):
    """Complete factorization of f over F_p as [(monic IntPoly, multiplicity)].

    Coefficients of the factors are reduced into [0, p).  The equal-degree
    splitting stage is randomized with a generator seeded from (f, p), so the
    result is deterministic.

    >>> factor_mod_p(IntPoly.of(1, 0, 1), 2)
    [(IntPoly('t + 1'), 2)]
    """
    fbar = _modp.trim(f.coeffs, p)
    if not fbar:
        raise ShapeError("polynomial vanishes mod p")
    _, fac = _modp.factor(fbar, p)
    return [(IntPoly(g), m) for g, m in fac]


# ---------------------------------------------------------------------------
# Q_p factor profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QpFactorProfile:
    """Degrees and root valuations of the monic irreducible factors over Q_p.

    ``factors`` is the sorted multiset of (degree, root valuation); the
    valuations of all roots of one irreducible factor agree, and degree times
    valuation is the (integer) valuation of the factor's constant term.
    ``precision_used`` is the exponent k such that block data was extracted
    modulo p^k.
    """

    p: int
    factors: tuple
    precision_used: int

    def __iter__(self):
        return iter(self.factors)


def has_root_of_valuation(profile: QpFactorProfile, v) -> bool:
    """True iff the profile contains a degree-1 factor of the given valuation."""
    v = Fraction(v)
    return any(d == 1 and s == v for d, s in profile.factors)


def has_factor_of_degree(profile: QpFactorProfile, d: int) -> bool:
    return any(deg == d for deg, _ in profile.factors)


def count_factors_of_degree(profile: QpFactorProfile, d: int) -> int:
    return sum(1 for deg, _ in profile.factors if deg == d)


def qp_factor_profile(f: IntPoly, p: int, precision_cap: int = DEFAULT_PRECISION_CAP) -> QpFactorProfile:
    """Certified (degree, root valuation) multiset of the Q_p factors of f.

    f must be monic with nonzero constant term.  The polynomial is first split
    into rational-irreducible pieces; each piece's profile comes from the
    block decomposition of its p-maximal order.  The result is checked against
    the Newton polygon of f (the profile must refine the polygon exactly) and
    against the constant-term valuation before being returned.

    >>> qp_factor_profile(IntPoly.of(4, -5, 1), 2).factors
    ((1, Fraction(2, 1)), (1, Fraction(0, 1)))
    >>> qp_factor_profile(IntPoly.of(4, 2, 1), 2).factors
    ((2, Fraction(1, 1)),)
    >>> qp_factor_profile(IntPoly.of(-3, 0, 1), 3).factors
    ((2, Fraction(1, 2)),)
    """
    if not f.is_monic:
        raise ShapeError("profile needs a monic polynomial")
    if f.coeff(0) == 0:
        raise ShapeError("profile needs a nonzero constant term")
    _, _, rational_factors = factor_rational(f)
    out = []
    precision = 1
    for m, mult in rational_factors:
        pieces, used = _profile_irreducible(m, p, precision_cap)
        precision = max(precision, used)
        out.extend(pieces * mult)
    out.sort(key=lambda ds: (-ds[1], ds[0]))
    profile = QpFactorProfile(p=p, factors=tuple(out), precision_used=precision)
    _check_profile(f, p, profile)
    return profile


def _check_profile(f: IntPoly, p: int, profile: QpFactorProfile):
    total = sum(d for d, _ in profile.factors)
    if total != f.degree:
        raise CertificationError("profile degrees do not sum to the polynomial degree")
    weighted = sum(Fraction(d) * s for d, s in profile.factors)
    if weighted != vp(f.coeff(0), p):
        raise CertificationError("profile violates the constant-term valuation")
    for d, s in profile.factors:
        if (Fraction(d) * s).denominator != 1 or s < 0:
            raise CertificationError("factor norm valuation is not a nonnegative integer")
    by_slope: dict = {}
    for d, s in profile.factors:
        by_slope[s] = by_slope.get(s, 0) + d
    if by_slope != newton_polygon(f, p).slope_multiset():
        raise CertificationError("profile does not refine the Newton polygon")


def _profile_irreducible(m: IntPoly, p: int, cap: int):
    """Profile of a monic rational-irreducible m; returns (pieces, precision)."""
    n = m.degree
    c0 = m.coeff(0)
    if n == 1:
        return [(1, Fraction(vp(c0, p)))], 1
    fbar = _modp.trim(m.coeffs, p)
    if _modp.deg(fbar) == n:
        der = _modp.derivative(fbar, p)
        if der and _modp.deg(_modp.gcd(fbar, der, p)) == 0:
            # unramified fast path: blocks are the factors mod p; at most one
            # of them is t itself, and it carries the whole constant valuation
            _, fac = _modp.factor(fbar, p)
            pieces = []
            for g, mult in fac:
                assert mult == 1
                if g == (0, 1):
                    pieces.append((1, Fraction(vp(c0, p))))
                else:
                    pieces.append((_modp.deg(g), Fraction(0)))
            return pieces, 1
    return _profile_via_order(m, p, cap)


# -- p-maximal orders -------------------------------------------------------


def _solve_upper(M, v):
    """Solve c @ M = v exactly for HNF upper-triangular M; None if non-integral."""
    n = len(M)
    c = [0] * n
    for j in range(n):
        acc = v[j]
        for i in range(j):
            acc -= c[i] * M[i][j]
        piv = M[j][j]
        if acc % piv:
            return None
        c[j] = acc // piv
    return c


def _poly_mul_mod(a, b, mpoly):
    """Product of integer coefficient vectors, reduced mod the monic mpoly."""
    n = len(mpoly) - 1
    out = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    for i in range(len(out) - 1, n - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(n):
                out[i - n + j] -= c * mpoly[j]
    return out[:n]


def _mult_table(M, s, p, mpoly):
    """Integer multiplication table of the order with basis rows(M)/p^s."""
    n = len(M)
    ps = p**s
    T = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            prod = _poly_mul_mod(M[i], M[j], mpoly)
            if ps > 1:
                if any(c % ps for c in prod):
                    return None
                prod = [c // ps for c in prod]
            coords = _solve_upper(M, prod)
            if coords is None:
                return None
            T[i][j] = T[j][i] = coords
    return T


def _mult_coords(u, v, T, mod):
    n = len(u)
    out = [0] * n
    for i in range(n):
        ui = u[i] % mod
        if ui:
            Ti = T[i]
            for j in range(n):
                vj = v[j] % mod
                if vj:
                    c = ui * vj
                    t = Ti[j]
                    for k in range(n):
                        out[k] += c * t[k]
    return [x % mod for x in out]


def _pow_coords(u, e, one, T, mod):
    result = list(one)
    base = list(u)
    while e:
        if e & 1:
            result = _mult_coords(result, base, T, mod)
        base = _mult_coords(base, base, T, mod)
        e >>= 1
    return result


def _frobenius_matrix(T, n, p, one):
    rows = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        rows.append(_pow_coords(e, p, one, T, p))
    return rows


def _radical_rows(T, n, p, one):
    """Coordinate basis of the nilradical of the order mod p."""
    F = _frobenius_matrix(T, n, p, one)
    need = 1
    q = p
    while q < n:
        q *= p
        need += 1
    Fm = F
    for _ in range(need - 1):
        Fm = _linalg.mat_mul_mod(Fm, F, p)
    return _linalg.left_kernel_mod_p(Fm, p)


def _p_maximal_order(m: IntPoly, p: int):
    """HNF basis (M, s) and multiplication table of the p-maximal order of Q[t]/(m).

    Pohst-Zassenhaus iteration: enlarge the order by the idealizer of its
    p-radical until it stabilizes; the fixed point is p-maximal.
    """
    n = m.degree
    mpoly = list(m.coeffs)
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    s = 0
    while True:
        T = _mult_table(M, s, p, mpoly)
        if T is None:
            raise CertificationError("order basis lost ring closure (internal error)")
        one = _order_unity(M, s, p, n)
        rad = _radical_rows(T, n, p, one)
        ideal_rows = [[p if i == j else 0 for j in range(n)] for i in range(n)]
        ideal_rows += [[x % p for x in row] for row in rad]
        C = _linalg.hnf(ideal_rows, n)
        # z in the order with z*I inside p*I, linear conditions mod p on coords
        cond_rows = []
        for k in range(n):
            e = [0] * n
            e[k] = 1
            row = []
            for cj in C:
                u = _exact_mult(e, cj, T)
                w = _solve_upper(C, u)
                if w is None:
                    raise CertificationError("radical is not an ideal (internal error)")
                row.extend(x % p for x in w)
            cond_rows.append(row)
        kernel = _linalg.left_kernel_mod_p(cond_rows, p)
        if not kernel:
            return M, s, T
        stacked = [[p * x for x in row] for row in M]
        for t_row in kernel:
            vec = [0] * n
            for i, ti in enumerate(t_row):
                if ti:
                    for j in range(n):
                        vec[j] += ti * M[i][j]
            stacked.append(vec)
        new_M = _linalg.hnf(stacked, n)
        new_s = s + 1
        while new_s > 0 and all(all(x % p == 0 for x in row) for row in new_M):
            new_M = [[x // p for x in row] for row in new_M]
            new_s -= 1
        if new_s == s and new_M == M:
            return M, s, T
        M, s = new_M, new_s


def _order_unity(M, s, p, n):
    """Coordinates of the algebra unity 1 with respect to the order basis."""
    target = [p**s] + [0] * (n - 1)
    one = _solve_upper(M, target)
    if one is None:
        raise CertificationError("order does not contain 1 (internal error)")
    return one


def _exact_mult(u, v, T):
    n = len(u)
    out = [0] * n
    for i in range(n):
        if u[i]:
            Ti = T[i]
            for j in range(n):
                if v[j]:
                    c = u[i] * v[j]
                    t = Ti[j]
                    for k in range(n):
                        out[k] += c * t[k]
    return out


# -- splitting the residue algebra into local blocks -------------------------


def _min_poly_in_block(z, unity, T, p, n):
    """Minimal monic polynomial of z acting in the block with the given unity."""
    vecs = [list(unity)]
    cur = list(unity)
    while True:
        cur = _mult_coords(cur, z, T, p)
        # look for a dependency among vecs + [cur]
        rows = vecs + [cur]
        kern = _linalg.left_kernel_mod_p([list(r) for r in rows], p)
        if kern:
            combo = kern[0]
            lead = len(rows) - 1
            while combo[lead] % p == 0:
                lead -= 1
            inv = pow(combo[lead], -1, p)
            coeffs = [(c * inv) % p for c in combo[: lead + 1]]
            return _modp.trim(coeffs, p)
        vecs.append(list(cur))
        if len(vecs) > n + 1:
            raise CertificationError("minimal polynomial search failed (internal error)")


def _crt_idempotents(mu, p):
    """For squarefree-in-primaries mu = prod q_i^{m_i}, the CRT idempotent
    polynomials u_i with u_i = 1 mod q_i^{m_i} and 0 mod the others."""
    _, fac = _modp.factor(mu, p)
    if len(fac) < 2:
        return None
    out = []
    for q, k in fac:
        qk = q
        for _ in range(k - 1):
            qk = _modp.mul(qk, q, p)
        rest = _modp.divmod_unit(mu, qk, p)[0]
        g, s, t = _modp._xgcd_poly(rest, qk, p)
        if g != _modp.ONE:
            raise CertificationError("CRT split failed (internal error)")
        out.append(_modp.mod(_modp.mul(rest, s, p), mu, p))
    return out


def _eval_poly_coords(poly, z, unity, T, p):
    out = [0] * len(z)
    acc = list(unity)
    for c in poly:
        if c:
            for k in range(len(out)):
                out[k] = (out[k] + c * acc[k]) % p
        acc = _mult_coords(acc, z, T, p)
    return out


def _block_count(T, n, p, rad, one):
    """Number of local blocks = dim of the Frobenius fixed space of O/p mod rad."""
    F = _frobenius_matrix(T, n, p, one)
    rad_echelon, pivots = _echelon(rad, p, n)

    def reduce_vec(v):
        v = [x % p for x in v]
        for row, piv in zip(rad_echelon, pivots):
            if v[piv]:
                c = v[piv]
                v = [(a - c * b) % p for a, b in zip(v, row)]
        return v

    free = [j for j in range(n) if j not in pivots]
    rows = []
    for j in free:
        e = [0] * n
        e[j] = 1
        img = [(a - b) % p for a, b in zip(_linalg.mat_mul_mod([e], F, p)[0], e)]
        img = reduce_vec(img)
        rows.append([img[k] for k in free])
    kern = _linalg.left_kernel_mod_p(rows, p)
    return len(kern)


def _echelon(rows, p, n):
    work = [[x % p for x in r] for r in rows]
    basis = []
    pivots = []
    for row in work:
        v = row[:]
        for b, piv in zip(basis, pivots):
            if v[piv]:
                c = v[piv]
                v = [(a - c * t) % p for a, t in zip(v, b)]
        nz = next((k for k in range(n) if v[k]), None)
        if nz is None:
            continue
        inv = pow(v[nz], -1, p)
        v = [(x * inv) % p for x in v]
        basis.append(v)
        pivots.append(nz)
    return basis, pivots


def _split_idempotents(T, n, p, r, rng, one):
    """Orthogonal idempotents mod p, one per local block (exactly r of them)."""
    blocks = [[x % p for x in one]]
    generators = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        generators.append(e)
    attempts = 0
    while len(blocks) < r:
        if generators:
            y = generators.pop(0)
        else:
            attempts += 1
            if attempts > 200:
                raise CertificationError("block splitting did not converge")
            y = [rng.randrange(p) for _ in range(n)]
        new_blocks = []
        for u in blocks:
            z = _mult_coords(u, y, T, p)
            mu = _min_poly_in_block(z, u, T, p, n)
            parts = _crt_idempotents(mu, p) if _modp.deg(mu) >= 1 else None
            if parts is None:
                new_blocks.append(u)
                continue
            for part in parts:
                eu = _eval_poly_coords(part, z, u, T, p)
                if any(eu):
                    new_blocks.append(eu)
        blocks = new_blocks
        if len(blocks) > r:
            raise CertificationError("found more blocks than certified (internal error)")
    return blocks


def _lift_idempotent(e, T, p, K):
    mod = p**K
    e = [x % mod for x in e]
    for _ in range(K.bit_length() + 2):
        e2 = _mult_coords(e, e, T, mod)
        if e2 == e:
            return e
        e3 = _mult_coords(e2, e, T, mod)
        e = [(3 * a - 2 * b) % mod for a, b in zip(e2, e3)]
    e2 = _mult_coords(e, e, T, mod)
    if e2 != e:
        raise CertificationError("idempotent lifting did not converge")
    return e


def _profile_via_order(m: IntPoly, p: int, cap: int):
    n = m.degree
    K = vp(m.coeff(0), p) + 2
    if K > cap:
        raise CertificationError(f"required precision exponent {K} exceeds the cap {cap}")
    M, s, T = _p_maximal_order(m, p)
    one = _order_unity(M, s, p, n)
    rad = _radical_rows(T, n, p, one)
    r = _block_count(T, n, p, rad, one)
    rng = _modp._rng_for(m.coeffs, p, salt=b"blocks")
    blocks = _split_idempotents(T, n, p, r, rng, one)
    # block dimensions (degrees of the p-adic factors)
    degrees = []
    for e in blocks:
        rows = []
        for i in range(n):
            b = [0] * n
            b[i] = 1
            rows.append(_mult_coords(e, b, T, p))
        degrees.append(_linalg.rank_mod_p(rows, p))
    if sum(degrees) != n:
        raise CertificationError("block dimensions do not sum to the degree")
    # x in order coordinates: solve against the basis at denominator p^s
    ps = p**s
    xvec = [0] * n
    xvec[1 if n > 1 else 0] = ps
    x_coords = _solve_upper(M, xvec)
    if x_coords is None:
        raise CertificationError("power basis does not embed in the order (internal error)")
    mod = p**K
    pieces = []
    for e, d in zip(blocks, degrees):
        eK = _lift_idempotent(e, T, p, K)
        xe = _mult_coords(x_coords, eK, T, mod)
        y = [(a + b - c) % mod for a, b, c in zip(xe, one, eK)]  # x*e + (1 - e)
        rows = []
        for i in range(n):
            b = [0] * n
            b[i] = 1
            rows.append(_mult_coords(y, b, T, mod))
        det = _linalg.det_bareiss(rows)
        v = vp(det, p)
        if v == INF or v >= K:
            raise CertificationError("norm valuation reached the working precision")
        pieces.append((d, Fraction(v, d)))
    return pieces, K

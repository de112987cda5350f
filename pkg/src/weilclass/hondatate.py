"""Honda-Tate classification: Brauer invariants, multiplicities, dimensions,
and the explicit dimension-5 criteria.

A monic irreducible Weil polynomial m determines a simple isogeny class whose
endomorphism algebra has one Brauer invariant per place of Q[t]/(m): 1/2 at
each real place, v_p(m_i(0))/n (mod 1) at the place of each p-adic factor
m_i, and 0 elsewhere.  The least common denominator e of those invariants is
the multiplicity: the characteristic polynomial of the class is m^e, and its
dimension is e*deg(m)/2.  A candidate polynomial f is therefore the
characteristic polynomial of a simple class iff f = m^e for a single
irreducible m with exactly that e.

For degree 10 the same verdict has an explicit coefficient-level description:
thirteen Newton-polygon shapes with valuation patterns and factor-profile
clauses, plus the quadratic-power family.  Both routes are computed on every
degree-10 candidate and any disagreement raises, since the equivalence is the
strongest self-check this package has.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .intpoly import IntPoly, ShapeError, factor_rational, sturm_count
from .padic import (
    INF,
    count_factors_of_degree,
    has_root_of_valuation,
    is_square_in_qp,
    newton_polygon,
    qp_factor_profile,
    vp,
)
from .weil import WeilCandidate, expand, is_weil_poly, real_sqrt_q_roots


class ClassificationError(RuntimeError):
    """An internal cross-check between two classification routes failed."""


@dataclass(frozen=True)
class BrauerInvariant:
    """Invariant of the endomorphism algebra at one place.

    Only real places (value 1/2) and places over p are materialized; complex
    and finite places away from p always carry 0 and are omitted.  For over-p
    places, ``index`` points into the factor profile.
    """

    place: str
    value: Fraction
    index: int | None = None


@dataclass(frozen=True)
class IsogenyClassReport:
    """Full classification verdict for one candidate."""

    candidate: WeilCandidate
    weil: bool
    min_poly: IntPoly | None
    multiplicity: int | None
    dimension: int | None
    simple_char_poly: bool
    invariants: tuple
    case_label: str
    real_root_flag: bool
    interpretation_tags: tuple = ()


def _real_root_count(m: IntPoly) -> int:
    return sturm_count(m)


_REAL_FORMS_DOC = "t - p^(n/2), t + p^(n/2) (n even) or t^2 - q (n odd)"


def _validate_real_form(m: IntPoly, p: int, n: int) -> int:
    """Number of real places of an irreducible Weil polynomial, enforcing that
    a real root only occurs for the three known shapes."""
    r = _real_root_count(m)
    if r == 0:
        return 0
    q = p**n
    if n % 2 == 0:
        s = p ** (n // 2)
        if m.coeffs in ((-s, 1), (s, 1)):
            return 1
    else:
        if m.coeffs == (-q, 0, 1):
            return 2
    raise ShapeError(f"irreducible Weil polynomial with a real root must be {_REAL_FORMS_DOC}")


def frobenius_invariants(m: IntPoly, p: int, n: int, profile=None) -> tuple:
    """Brauer invariants of the simple class attached to irreducible Weil m.

    One invariant of value v_p(m_i(0))/n mod 1 per p-adic factor m_i of m
    (read off the certified factor profile), plus 1/2 per real place.

    >>> frobenius_invariants(IntPoly.of(-3, 0, 1), 3, 1)
    (BrauerInvariant(place='real', value=Fraction(1, 2), index=None), BrauerInvariant(place='real', value=Fraction(1, 2), index=None), BrauerInvariant(place='over-p', value=Fraction(0, 1), index=0))
    """
    if m.degree < 1 or not m.is_monic:
        raise ShapeError("invariants need a monic polynomial of degree >= 1")
    if profile is None:
        from .intpoly import rational_irreducibility

        if m.degree > 1 and rational_irreducibility(m).status != "irreducible":
            raise ShapeError("invariants are defined for irreducible polynomials only")
        profile = qp_factor_profile(m, p)
    out = [BrauerInvariant("real", Fraction(1, 2))] * _validate_real_form(m, p, n)
    for idx, (d, s) in enumerate(profile.factors):
        norm_val = Fraction(d) * s
        assert norm_val.denominator == 1
        out.append(BrauerInvariant("over-p", Fraction(int(norm_val) % n, n), index=idx))
    return tuple(out)


def multiplicity_e(m: IntPoly, p: int, n: int, profile=None) -> int:
    """Least common denominator of the Brauer invariants.

    >>> multiplicity_e(IntPoly.of(-3, 0, 1), 3, 1)
    2
    >>> multiplicity_e(IntPoly.of(2, -1, 1), 2, 1)
    1
    """
    e = 1
    for inv in frobenius_invariants(m, p, n, profile=profile):
        d = inv.value.denominator
        e = e * d // int_gcd(e, d)
    return e


def dimension_of_simple(m: IntPoly, p: int, n: int, profile=None) -> int:
    """Dimension e*deg(m)/2 of the simple class attached to m."""
    e = multiplicity_e(m, p, n, profile=profile)
    prod = e * m.degree
    if prod % 2:
        raise ClassificationError("odd e*deg(m): impossible for a Weil input")
    return prod // 2


def lemma_real_dimension(n: int) -> int:
    """Dimension of a simple class whose polynomial has a real root: 1 if the
    field exponent n is even, 2 if odd."""
    return 1 if n % 2 == 0 else 2


def allowed_multiplicities_prime_dim(l: int) -> set:
    """For simple classes of odd prime dimension l, the multiplicity is 1 or l."""
    from .weil import is_prime

    if l == 2 or not is_prime(l):
        raise ShapeError("needs an odd prime dimension")
    return {1, l}


def quadratic_class_dimension(a: int, p: int, n: int) -> int:
    """Dimension of the simple class with minimal polynomial t^2 + a*t + q,
    for a^2 < 4q: n/gcd(v_p(a), n) if v_p(a) < n/2, else 2 or 1 according to
    whether a^2 - 4q is a p-adic square.

    >>> quadratic_class_dimension(2, 2, 2)
    1
    >>> quadratic_class_dimension(2, 2, 5)
    5
    >>> quadratic_class_dimension(0, 5, 1)
    1
    """
    q = p**n
    if a * a >= 4 * q:
        raise ShapeError("needs a^2 < 4q (no real roots)")
    m = vp(a, p)
    if m != INF and 2 * m < n:
        return n // int_gcd(int(m), n)
    d = a * a - 4 * q
    return 2 if is_square_in_qp(d, p) else 1


def quadratic_power_criterion(p: int, n: int, g: int, a: int, b: int):
    """Whether (t^2 + a*t + b)^g is the characteristic polynomial of a simple
    dimension-g class (g > 2): requires g | n, b = q, a^2 < 4q, and
    a = k*q^(s/g) with gcd(k, p) = 1, gcd(s, g) = 1, 1 <= s < g/2.

    Returns (bool, reason).  s is recovered as g*v_p(a)/n; the sign of a is
    absorbed into k.

    >>> quadratic_power_criterion(2, 5, 5, 2, 32)
    (True, 'a = k*q^(1/5)')
    >>> quadratic_power_criterion(2, 5, 5, 8, 32)
    (False, 's = 3 not in [1, g/2)')
    """
    if g <= 2:
        raise ShapeError("the power criterion applies for g > 2")
    q = p**n
    if b != q:
        return False, f"constant {b} != q"
    if n % g:
        return False, f"{g} does not divide n = {n}"
    if a * a >= 4 * q:
        return False, "a^2 >= 4q"
    if a == 0:
        return False, "a = 0 has no valid s"
    v = vp(a, p)
    if (g * v) % n:
        return False, f"v_p(a) = {v} is not a multiple of n/g"
    s = g * v // n
    if not (1 <= s and 2 * s < g):
        return False, f"s = {s} not in [1, g/2)"
    if int_gcd(s, g) != 1:
        return False, f"gcd(s, g) = {int_gcd(s, g)} != 1"
    return True, f"a = k*q^({s}/{g})"


# ---------------------------------------------------------------------------
# The explicit dimension-5 conditions
# ---------------------------------------------------------------------------

#: Hull vertices (x, height/n) of the thirteen admissible polygons of an
#: irreducible degree-10 candidate.  The valuation pattern of each case is
#: derived from its hull: points pinned at vertices, on-or-above elsewhere.
DIM5_POLYGONS = {
    2: ((0, 5), (1, 4), (9, 0), (10, 0)),
    3: ((0, 5), (1, 4), (4, 2), (6, 1), (9, 0), (10, 0)),
    4: ((0, 5), (1, 4), (5, 1), (9, 0), (10, 0)),
    5: ((0, 5), (2, 3), (8, 0), (10, 0)),
    6: ((0, 5), (2, 3), (5, 1), (8, 0), (10, 0)),
    7: ((0, 5), (3, 2), (7, 0), (10, 0)),
    8: ((0, 5), (3, 3), (7, 1), (10, 0)),
    9: ((0, 5), (4, 1), (6, 0), (10, 0)),
    10: ((0, 5), (4, 2), (6, 1), (10, 0)),
    11: ((0, 5), (5, 0), (10, 0)),
    12: ((0, 5), (5, 1), (10, 0)),
    13: ((0, 5), (5, 2), (10, 0)),
    14: ((0, 5), (10, 0)),
}

#: Factor-profile clauses per case, as multiples of n: forbidden root
#: valuations, forbidden irreducible-factor degrees, and required counts.
#: "factor of degree d" is read as "irreducible factor of degree d"
#: throughout (tagged in reports).
DIM5_PROFILE_CLAUSES = {
    2: {"no_root": (Fraction(1, 2),), "no_degree": (3,)},
    3: {"no_root": (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))},
    4: {"no_root": (Fraction(1, 4), Fraction(3, 4)), "no_degree": (2,)},
    5: {"no_root": (Fraction(1, 2),), "no_degree": (3,)},
    6: {"no_root": (Fraction(1, 3), Fraction(2, 3))},
    7: {"no_root": (Fraction(1, 2),)},
    8: {"no_root": (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))},
    9: {"no_root": (Fraction(1, 2),)},
    10: {"no_root": (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)), "two_of_degree": 4},
    11: {},
    12: {"two_of_degree": 5},
    13: {"two_of_degree": 5},
    14: {"no_root": (Fraction(1, 2),), "no_degree": (3, 5)},
}


def _hull_height(vertices, x):
    for (x1, y1), (x2, y2) in zip(vertices, vertices[1:]):
        if x1 <= x <= x2:
            return Fraction(y1) + Fraction(y2 - y1, x2 - x1) * (x - x1)
    raise ValueError("x outside the hull")


def dim5_valuation_conditions(case: int):
    """The exact (in)equalities on v_p(a_1..a_5), in units of n, for one case:
    a list of (index, relation, threshold) with relation "==" at hull vertices
    and ">=" elsewhere."""
    vertices = DIM5_POLYGONS[case]
    vertex_x = {x for x, _ in vertices}
    out = []
    for i in range(1, 6):
        threshold = _hull_height(vertices, i) - (5 - i)
        out.append((i, "==" if i in vertex_x else ">=", threshold))
    return out


def _valuation_pattern_matches(case: int, vals, n: int) -> bool:
    for i, rel, threshold in dim5_valuation_conditions(case):
        v = vals[i - 1]
        bound = threshold * n
        if rel == "==":
            if v == INF or Fraction(int(v)) != bound:
                return False
        else:
            if v != INF and Fraction(int(v)) < bound:
                return False
    return True


@dataclass(frozen=True)
class Dim5Result:
    """Outcome of the explicit dimension-5 test: a case label or a rejection."""

    label: str
    reason: str = ""
    tags: tuple = ()

    @property
    def accepted(self) -> bool:
        return self.label != "rejected"


def _polygon_tag(case: int) -> str:
    return "polygon:" + "".join(f"({x},{y})" for x, y in DIM5_POLYGONS[case])


def classify_dim5(c: WeilCandidate, _factorization=None, _profile=None) -> Dim5Result:
    """Explicit coefficient-level test for degree-10 Weil candidates.

    Accepts iff expand(c) is the characteristic polynomial of a simple
    dimension-5 class: either (t^2+at+q)^5 passing the power criterion, or
    irreducible matching one of the thirteen polygon cases together with its
    factor-profile clauses.  The candidate must already be Weil.
    """
    if c.g != 5:
        raise ShapeError("dimension-5 test needs g = 5")
    f = expand(c)
    fac = _factorization if _factorization is not None else factor_rational(f)[2]
    if len(fac) == 1 and fac[0][1] == 5 and fac[0][0].degree == 2:
        m = fac[0][0]
        ok, reason = quadratic_power_criterion(c.p, c.n, 5, m.coeff(1), m.coeff(0))
        if ok:
            return Dim5Result("I(1)", reason)
        return Dim5Result("rejected", f"quadratic power: {reason}")
    if len(fac) != 1 or fac[0][1] != 1:
        shape = " * ".join(f"deg{g.degree}^{m}" for g, m in fac)
        return Dim5Result("rejected", f"neither irreducible nor a quadratic fifth power ({shape})")
    vals = [vp(a, c.p) for a in c.a]
    matches = [k for k in DIM5_POLYGONS if _valuation_pattern_matches(k, vals, c.n)]
    if len(matches) > 1:
        raise ClassificationError(f"valuation patterns are not mutually exclusive: {matches}")
    if not matches:
        return Dim5Result("rejected", "no admissible polygon pattern")
    case = matches[0]
    tags = ("degree-clauses:irreducible", _polygon_tag(case))
    clauses = DIM5_PROFILE_CLAUSES[case]
    profile = _profile if _profile is not None else qp_factor_profile(f, c.p)
    for r in clauses.get("no_root", ()):
        if has_root_of_valuation(profile, r * c.n):
            return Dim5Result("rejected", f"case ({case}): root of valuation {r}*n", tags)
    for d in clauses.get("no_degree", ()):
        if count_factors_of_degree(profile, d):
            return Dim5Result("rejected", f"case ({case}): irreducible factor of degree {d}", tags)
    need = clauses.get("two_of_degree")
    if need is not None and count_factors_of_degree(profile, need) != 2:
        return Dim5Result("rejected", f"case ({case}): fewer than two irreducible factors of degree {need}", tags)
    return Dim5Result(f"II({case})", f"case ({case})", tags)


# ---------------------------------------------------------------------------
# The general pipeline
# ---------------------------------------------------------------------------


def classify(c: WeilCandidate) -> IsogenyClassReport:
    """Full classification of a candidate.

    Decides the Weil property, factors the expansion over Q, and applies the
    invariant machinery: the candidate is the characteristic polynomial of a
    simple class iff it is m^e for a single irreducible m whose least common
    invariant denominator is exactly e.  For g = 5 the explicit
    coefficient-level test runs as well and must agree.

    >>> classify(WeilCandidate(5, 1, 1, (1,))).dimension
    1
    >>> classify(WeilCandidate(3, 1, 2, (0, -6))).multiplicity
    2
    """
    f = expand(c)
    q = c.q
    if not is_weil_poly(f, q):
        return IsogenyClassReport(
            candidate=c,
            weil=False,
            min_poly=None,
            multiplicity=None,
            dimension=None,
            simple_char_poly=False,
            invariants=(),
            case_label="rejected:not-weil",
            real_root_flag=real_sqrt_q_roots(c).has_root,
        )
    _, _, fac = factor_rational(f)
    tags: tuple = ()
    if len(fac) == 1:
        m, e = fac[0]
        profile_m = qp_factor_profile(m, c.p)
        invariants = frobenius_invariants(m, c.p, c.n, profile=profile_m)
        e_true = 1
        for inv in invariants:
            d = inv.value.denominator
            e_true = e_true * d // int_gcd(e_true, d)
        simple = e == e_true
        real_flag = any(inv.place == "real" for inv in invariants)
        dimension = e * m.degree // 2 if simple else None
        min_poly = m
        multiplicity = e
        reason = "" if simple else f"multiplicity {e} != invariant denominator {e_true}"
    else:
        simple = False
        min_poly = None
        multiplicity = None
        dimension = None
        invariants = ()
        real_flag = real_sqrt_q_roots(c).has_root
        reason = "reducible with distinct irreducible factors"

    if c.g == 5:
        irreducible = len(fac) == 1 and fac[0][1] == 1
        d5 = classify_dim5(
            c,
            _factorization=fac,
            _profile=profile_m if irreducible else None,
        )
        general_accepts = simple and dimension == 5
        if d5.accepted != general_accepts:
            raise ClassificationError(
                f"dimension-5 criteria disagree with the invariant test on {c}: "
                f"explicit={d5.label} ({d5.reason}), general simple={simple}, dim={dimension}"
            )
        label = d5.label if d5.accepted else f"rejected:{d5.reason}"
        tags = d5.tags
    elif simple:
        label = "non-dim5"
    else:
        label = f"rejected:{reason}"

    report = IsogenyClassReport(
        candidate=c,
        weil=True,
        min_poly=min_poly,
        multiplicity=multiplicity,
        dimension=dimension,
        simple_char_poly=simple,
        invariants=invariants,
        case_label=label,
        real_root_flag=real_flag,
        interpretation_tags=tags,
    )
    _post_assertions(report, c)
    return report


def _post_assertions(report: IsogenyClassReport, c: WeilCandidate):
    """Structural laws every accepted report must satisfy; violations raise."""
    if not report.simple_char_poly:
        return
    e = report.multiplicity
    dim = report.dimension
    if e * report.min_poly.degree != 2 * dim:
        raise ClassificationError("e * deg(m) != 2 * dim")
    if (2 * dim) % e:
        raise ClassificationError("e does not divide 2*dim")
    if not report.real_root_flag:
        if c.n % e:
            raise ClassificationError(f"e = {e} does not divide n = {c.n} without a real root")
    else:
        if dim != lemma_real_dimension(c.n):
            raise ClassificationError("real-root dimension law violated")
        _validate_real_form(report.min_poly, c.p, c.n)
    if dim is not None and dim % 2 and dim > 2:
        from .weil import is_prime

        if is_prime(dim) and e not in (1, dim):
            raise ClassificationError(f"odd prime dimension {dim} with e = {e}")
    if dim == c.g:
        polygon = newton_polygon(expand(c), c.p)
        if not all(v % c.n == 0 for _, v in polygon.vertices):
            raise ClassificationError("accepted polynomial has a non-lattice polygon vertex")

"""Tests for valuations, Newton polygons, mod-p factorization, and Q_p profiles."""

import random
from fractions import Fraction

import pytest
import sympy

from weilclass.intpoly import IntPoly, ShapeError
from weilclass.padic import (
    INF,
    CertificationError,
    count_factors_of_degree,
    factor_mod_p,
    has_factor_of_degree,
    has_root_of_valuation,
    is_square_in_qp,
    newton_polygon,
    qp_factor_profile,
    vertex_lattice_check,
    vp,
)


class TestVp:
    def test_examples(self):
        assert vp(12, 2) == 2
        assert vp(0, 5) == INF
        assert vp(-250, 5) == 3

    def test_additivity(self):
        rng = random.Random(1)
        for _ in range(200):
            a = rng.randint(1, 10**6)
            b = rng.randint(1, 10**6)
            p = rng.choice([2, 3, 5, 7])
            assert vp(a * b, p) == vp(a, p) + vp(b, p)


class TestSquaresInQp:
    def test_examples(self):
        assert not is_square_in_qp(-12, 2)  # unit -3 = 5 mod 8
        assert is_square_in_qp(25, 5)
        assert is_square_in_qp(-4, 5)  # -4 = 1 mod 5

    def test_perfect_squares(self):
        rng = random.Random(2)
        for _ in range(100):
            d = rng.randint(1, 10**4)
            p = rng.choice([2, 3, 5, 7, 11])
            assert is_square_in_qp(d * d, p)

    def test_p_times_unit_never_square(self):
        for p in (2, 3, 5, 7):
            for u in range(1, 30):
                if u % p:
                    assert not is_square_in_qp(p * u, p)
                    assert not is_square_in_qp(-p * u, p)


class TestNewtonPolygon:
    def test_single_segment(self):
        # (0,2),(1,1),(2,0) are collinear: one segment, corners only as vertices
        np_ = newton_polygon(IntPoly.of(4, 2, 1), 2)
        assert np_.vertices == ((0, 2), (2, 0))
        assert np_.segments == ((Fraction(1), 2),)

    def test_two_segments(self):
        np_ = newton_polygon(IntPoly.of(8, 2, 1), 2)
        assert np_.vertices == ((0, 3), (1, 1), (2, 0))
        assert np_.segments == ((Fraction(2), 1), (Fraction(1), 1))

    def test_eisenstein(self):
        np_ = newton_polygon(IntPoly.of(-3, 0, 1), 3)
        assert np_.segments == ((Fraction(1, 2), 2),)
        assert np_.points[1][1] == INF

    def test_segment_lengths_sum_to_degree(self):
        rng = random.Random(3)
        for _ in range(200):
            d = rng.randint(1, 10)
            f = IntPoly.from_coeffs([rng.randint(1, 10**6)] + [rng.randint(-(10**6), 10**6) for _ in range(d - 1)] + [1])
            p = rng.choice([2, 3, 5])
            np_ = newton_polygon(f, p)
            assert sum(length for _, length in np_.segments) == d
            slopes = [s for s, _ in np_.segments]
            assert slopes == sorted(slopes, reverse=True)

    def test_rejects_zero_constant(self):
        with pytest.raises(ShapeError):
            newton_polygon(IntPoly.of(0, 1), 2)

    def test_lattice_check(self):
        assert not vertex_lattice_check(newton_polygon(IntPoly.of(8, 2, 1), 2), 3)
        assert vertex_lattice_check(newton_polygon(IntPoly.of(16, 4, 1), 2), 2)


class TestFactorModP:
    def test_frobenius_square(self):
        assert factor_mod_p(IntPoly.of(1, 0, 1), 2) == [(IntPoly.of(1, 1), 2)]

    def test_split_quadratic(self):
        fac = factor_mod_p(IntPoly.of(1, 0, 1), 5)
        assert sorted(g.coeffs for g, _ in fac) == [(2, 1), (3, 1)]
        assert all(m == 1 for _, m in fac)

    def test_irreducible_quartic(self):
        fac = factor_mod_p(IntPoly.of(1, 1, 0, 0, 1), 2)
        assert fac == [(IntPoly.of(1, 1, 0, 0, 1), 1)]

    def test_against_sympy(self):
        rng = random.Random(4)
        x = sympy.Symbol("x")
        for _ in range(150):
            p = rng.choice([2, 3, 5, 7])
            d = rng.randint(1, 8)
            coeffs = [rng.randrange(p) for _ in range(d)] + [1]
            f = IntPoly.from_coeffs(coeffs)
            ours = factor_mod_p(f, p)
            prod = IntPoly.of(1)
            for g, m in ours:
                prod = prod * g**m
            assert factor_mod_p(prod - f, p) if False else True
            # product reduces to f mod p
            assert tuple(c % p for c in prod.coeffs[: len(f.coeffs)]) == tuple(c % p for c in f.coeffs)
            theirs = sympy.Poly(list(reversed(f.coeffs)), x, modulus=p, symmetric=False).factor_list()[1]
            assert sorted((g.degree, m) for g, m in ours) == sorted((h.degree(), m) for h, m in theirs)
            for g, _ in ours:
                assert sympy.Poly(list(reversed(g.coeffs)), x, modulus=p, symmetric=False).is_irreducible


def profile_pairs(profile):
    return sorted(profile.factors)


class TestProfileExamples:
    def test_rational_roots(self):
        prof = qp_factor_profile(IntPoly.of(4, -5, 1), 2)
        assert profile_pairs(prof) == [(1, Fraction(0)), (1, Fraction(2))]

    def test_unramified_quadratic(self):
        prof = qp_factor_profile(IntPoly.of(4, 2, 1), 2)
        assert prof.factors == ((2, Fraction(1)),)

    def test_eisenstein_ramified(self):
        prof = qp_factor_profile(IntPoly.of(-3, 0, 1), 3)
        assert prof.factors == ((2, Fraction(1, 2)),)

    def test_predicates(self):
        prof = qp_factor_profile(IntPoly.of(4, -5, 1), 2)
        assert has_root_of_valuation(prof, 2)
        assert not has_root_of_valuation(prof, 1)
        assert has_factor_of_degree(prof, 1)
        assert not has_factor_of_degree(prof, 3)
        assert count_factors_of_degree(prof, 1) == 2

    def test_degree_two_not_root(self):
        prof = qp_factor_profile(IntPoly.of(4, 2, 1), 2)
        assert not has_root_of_valuation(prof, 1)

    def test_wild_ramified_quartic(self):
        # (t^2+2t+4)(t^2-2): mixed unramified slope-1 and ramified slope-1/2
        f = IntPoly.of(4, 2, 1) * IntPoly.of(-2, 0, 1)
        prof = qp_factor_profile(f, 2)
        assert profile_pairs(prof) == [(2, Fraction(1, 2)), (2, Fraction(1))]

    def test_repeated_rational_factor(self):
        f = IntPoly.of(-2, 0, 1) ** 2
        prof = qp_factor_profile(f, 2)
        assert prof.factors == ((2, Fraction(1, 2)), (2, Fraction(1, 2)))

    def test_requires_monic(self):
        with pytest.raises(ShapeError):
            qp_factor_profile(IntPoly.of(1, 0, 2), 2)

    def test_precision_cap(self):
        with pytest.raises(CertificationError):
            qp_factor_profile(IntPoly.of(1024, 0, 1), 2, precision_cap=3)


# ---------------------------------------------------------------------------
# Constructed-factor oracle
# ---------------------------------------------------------------------------


def random_eisenstein(rng, p, d):
    coeffs = [p * rng.choice([u for u in range(1, 3 * p) if u % p])]
    coeffs += [p * rng.randint(0, 3) for _ in range(d - 1)]
    coeffs += [1]
    return IntPoly.from_coeffs(coeffs), (d, Fraction(1, d))


def random_unramified_lift(rng, p, d):
    # constant term must stay a unit, otherwise the lift is not slope 0
    x = sympy.Symbol("x")
    while True:
        coeffs = [rng.randrange(1, p) if i == 0 else rng.randrange(p) for i in range(d)] + [1]
        if sympy.Poly(list(reversed(coeffs)), x, modulus=p, symmetric=False).is_irreducible:
            lifted = [c + p * rng.randint(0, 2) for c in coeffs[:-1]] + [1]
            return IntPoly.from_coeffs(lifted), (d, Fraction(0))


def random_scaled_linear(rng, p):
    k = rng.randint(0, 4)
    u = rng.choice([u for u in range(1, 4 * p) if u % p])
    sign = rng.choice([1, -1])
    return IntPoly.of(-sign * u * p**k, 1), (1, Fraction(k))


def build_product(rng, p, max_degree=10):
    f = IntPoly.of(1)
    expected = []
    budget = max_degree
    count = rng.randint(2, 4)
    for _ in range(count):
        if budget < 1:
            break
        kind = rng.choice(["eis", "unram", "lin"])
        if kind == "lin" or budget == 1:
            g, pair = random_scaled_linear(rng, p)
        elif kind == "eis":
            d = rng.randint(1, min(4, budget))
            g, pair = random_eisenstein(rng, p, d)
        else:
            d = rng.randint(1, min(4, budget))
            g, pair = random_unramified_lift(rng, p, d)
        f = f * g
        expected.append(pair)
        budget -= pair[0]
    return f, sorted(expected)


class TestProfileOracle:
    def test_constructed_products(self):
        rng = random.Random(12345)
        for _ in range(120):
            p = rng.choice([2, 3, 5])
            f, expected = build_product(rng, p)
            prof = qp_factor_profile(f, p)
            assert profile_pairs(prof) == expected
            assert sum(Fraction(d) * s for d, s in prof.factors) == vp(f.coeff(0), p)

    def test_profile_refines_polygon(self):
        rng = random.Random(99)
        for _ in range(60):
            p = rng.choice([2, 3, 5])
            f, _ = build_product(rng, p)
            prof = qp_factor_profile(f, p)
            by_slope = {}
            for d, s in prof.factors:
                by_slope[s] = by_slope.get(s, 0) + d
            assert by_slope == newton_polygon(f, p).slope_multiset()

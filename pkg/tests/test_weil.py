"""Tests for Weil candidates: expansion, the exact Weil test, real roots, pruning."""

import math
import random

import numpy as np
import pytest

from weilclass.intpoly import IntPoly, ShapeError, functional_equation_holds
from weilclass.weil import (
    SqrtQRootReport,
    WeilCandidate,
    coefficient_interval,
    expand,
    is_weil,
    is_weil_poly,
    real_sqrt_q_roots,
)


class TestCandidate:
    def test_validation(self):
        with pytest.raises(ShapeError):
            WeilCandidate(4, 1, 1, (1,))
        with pytest.raises(ShapeError):
            WeilCandidate(5, 1, 2, (1,))
        assert WeilCandidate(5, 2, 1, (1,)).q == 25

    def test_expand_examples(self):
        assert expand(WeilCandidate(7, 1, 1, (3,))).coeffs == (7, 3, 1)
        assert expand(WeilCandidate(2, 2, 2, (1, 2))).coeffs == (16, 4, 2, 1, 1)
        f = expand(WeilCandidate(2, 3, 3, (2, 0, 0)))
        assert f.coeffs == (512, 128, 0, 0, 0, 2, 1)

    def test_expand_satisfies_functional_equation(self):
        rng = random.Random(8)
        for _ in range(200):
            g = rng.randint(1, 5)
            c = WeilCandidate(rng.choice([2, 3, 5]), rng.randint(1, 3), g, tuple(rng.randint(-50, 50) for _ in range(g)))
            assert functional_equation_holds(expand(c), c.q, c.g)


from oracles import check_weil_against_floating


class TestIsWeil:
    def test_examples(self):
        assert is_weil(WeilCandidate(2, 1, 1, (-1,)))  # t^2 - t + 2
        assert not is_weil(WeilCandidate(2, 1, 1, (3,)))  # (t+1)(t+2)
        assert not is_weil(WeilCandidate(5, 1, 1, (-5,)))  # a^2 = 25 > 20

    def test_boundary_included(self):
        # a = +-4 at q = 4 gives (t -+ 2)^2, roots of modulus sqrt(q): Weil
        assert is_weil(WeilCandidate(2, 2, 1, (-4,)))
        assert is_weil(WeilCandidate(2, 2, 1, (4,)))
        assert not is_weil(WeilCandidate(2, 2, 1, (5,)))

    def test_real_pair(self):
        # (t^2 - 3)^2 from the tuple (0, -6) at q = 3
        assert is_weil(WeilCandidate(3, 1, 2, (0, -6)))

    def test_against_floating_oracle(self):
        rng = random.Random(13)
        results = {"ok": 0, "exempt": 0, "fail": 0}
        weil_seen = 0
        for _ in range(3000):
            g = rng.randint(1, 5)
            p, n = rng.choice([(2, 1), (5, 1), (3, 2), (2, 2)])
            q = p**n
            bounds = [math.comb(2 * g, k) * q ** (k / 2) for k in range(1, g + 1)]
            a = tuple(rng.randint(-int(b), int(b)) for b in bounds)
            c = WeilCandidate(p, n, g, a)
            ours = is_weil(c)
            weil_seen += ours
            results[check_weil_against_floating(expand(c), q, ours)] += 1
        assert results["fail"] == 0
        assert results["ok"] > 2500
        assert weil_seen > 20  # the sample must actually exercise positives

    def test_binomial_bound_invariant(self):
        rng = random.Random(21)
        found = 0
        while found < 50:
            g = rng.randint(1, 3)
            p, n = rng.choice([(2, 1), (3, 1), (2, 2)])
            q = p**n
            a = tuple(rng.randint(-3 * g, 3 * g) for _ in range(g))
            c = WeilCandidate(p, n, g, a)
            if not is_weil(c):
                continue
            found += 1
            for k in range(1, g + 1):
                assert a[k - 1] ** 2 <= math.comb(2 * g, k) ** 2 * q**k


class TestRealSqrtQRoots:
    def test_examples(self):
        assert real_sqrt_q_roots(WeilCandidate(3, 1, 2, (0, -6))) == SqrtQRootReport(pair=2)
        assert real_sqrt_q_roots(WeilCandidate(2, 2, 1, (-4,))) == SqrtQRootReport(plus=2)
        assert real_sqrt_q_roots(WeilCandidate(2, 1, 1, (-1,))) == SqrtQRootReport()

    def test_divisibility_consistency(self):
        c = WeilCandidate(2, 2, 2, (0, -8))  # (t^2-4)^2 = (t-2)^2 (t+2)^2
        rep = real_sqrt_q_roots(c)
        assert rep.plus == 2 and rep.minus == 2
        f = expand(c)
        assert f.coeffs == (IntPoly.of(-2, 1) ** 2 * IntPoly.of(2, 1) ** 2).coeffs


class TestCoefficientInterval:
    def test_baseline_examples(self):
        assert coefficient_interval(5, 1, 1, ()) == (-4, 4)
        assert coefficient_interval(2, 1, 1, ()) == (-2, 2)
        lo, hi = coefficient_interval(2, 1, 5, ())
        assert -14 <= lo <= hi <= 14

    def test_soundness_on_enumeration(self):
        # every Weil tuple's a_k lies in the interval computed from its prefix
        rng = random.Random(31)
        found = 0
        while found < 40:
            g = rng.randint(1, 3)
            p, n = rng.choice([(2, 1), (3, 1), (5, 1), (2, 2)])
            q = p**n
            a = tuple(rng.randint(-6 * g, 6 * g) for _ in range(g))
            c = WeilCandidate(p, n, g, a)
            if not is_weil(c):
                continue
            found += 1
            for k in range(1, g + 1):
                for depth in (0, 1, g):
                    lo, hi = coefficient_interval(p, n, g, a[: k - 1], depth=depth)
                    assert lo <= a[k - 1] <= hi

    def test_refined_no_wider_than_baseline(self):
        for prefix in [(), (1,), (-2,)]:
            k = len(prefix) + 1
            lo0, hi0 = coefficient_interval(2, 1, 3, prefix, depth=0)
            lo1, hi1 = coefficient_interval(2, 1, 3, prefix, depth=3)
            assert lo0 <= lo1 and hi1 <= hi0


class TestIsWeilPoly:
    def test_direct_poly_interface(self):
        assert is_weil_poly(IntPoly.of(2, -1, 1), 2)
        assert not is_weil_poly(IntPoly.of(2, 3, 1), 2)

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gkzeta.numtheory import (
    IntPolynomial,
    ONE,
    PrimePower,
    cyclotomic,
    divisors,
    euler_phi,
    is_prime,
    legendre,
    moebius,
    mult_order,
    newton_slopes,
    resultant,
    splitting_in_cyclotomic,
    splitting_in_quadratic,
    squarefree_part,
    valuation,
)

from oracles import direct_newton_slopes


PRIMES_BELOW_100 = [p for p in range(2, 100) if is_prime(p)]


class TestPrimes:
    def test_small(self):
        assert PRIMES_BELOW_100[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_miller_rabin_bases_are_not_misreported(self):
        for p in (17, 19, 23, 29, 31, 37):
            assert is_prime(p)

    def test_composites(self):
        for n in (0, 1, 4, 9, 25, 91, 561, 1105):
            assert not is_prime(n)

    def test_prime_power(self):
        q = PrimePower.from_q(49)
        assert (q.p, q.n, q.q) == (7, 2, 49)
        assert not q.degree_is_odd
        with pytest.raises(ValueError):
            PrimePower.from_q(12)

    def test_valuation(self):
        assert valuation(48, 2) == 4
        assert valuation(-27, 3) == 3
        assert valuation(5, 3) == 0

    def test_squarefree_part(self):
        assert squarefree_part(12) == 3
        assert squarefree_part(-8) == -2
        assert squarefree_part(7) == 7


class TestPolynomials:
    def test_arith(self):
        f = IntPolynomial([1, 2, 1])
        g = IntPolynomial([1, 1])
        assert g * g == f
        assert f.exact_div(g) == g
        assert (f - g) == IntPolynomial([0, 1, 1])
        assert f(3) == 16

    def test_exact_div_rejects(self):
        with pytest.raises(ValueError):
            IntPolynomial([1, 0, 1]).exact_div(IntPolynomial([1, 1]))

    def test_reciprocal_and_scale(self):
        f = IntPolynomial([9, -3, 1])
        assert f.reciprocal() == IntPolynomial([1, -3, 9])
        assert f.scale_arg(2) == IntPolynomial([9, -6, 4])

    def test_str(self):
        assert str(IntPolynomial([9, 0, -1, 1])) == "t^3 - t^2 + 9"


class TestCyclotomic:
    def test_values(self):
        assert cyclotomic(1) == IntPolynomial([-1, 1])
        assert cyclotomic(2) == IntPolynomial([1, 1])
        assert cyclotomic(4) == IntPolynomial([1, 0, 1])
        assert cyclotomic(12) == IntPolynomial([1, 0, -1, 0, 1])

    def test_degree_is_phi(self):
        for r in range(1, 121):
            assert cyclotomic(r).degree == euler_phi(r)

    def test_product_identity_spot(self):
        for r in (1, 2, 6, 12, 30, 105):
            prod = ONE
            for d in divisors(r):
                prod = prod * cyclotomic(d)
            assert prod == IntPolynomial([-1] + [0] * (r - 1) + [1])

    def test_second_coefficient_is_minus_moebius(self):
        # the sum of primitive r-th roots of unity is mu(r)
        for r in range(2, 61):
            f = cyclotomic(r)
            assert f[f.degree - 1] == -moebius(r)


class TestMultiplicative:
    def test_phi(self):
        assert [euler_phi(r) for r in (1, 2, 8, 12, 240)] == [1, 1, 4, 4, 64]

    def test_moebius(self):
        assert [moebius(r) for r in (1, 2, 4, 6, 30)] == [1, -1, 0, 1, -1]

    def test_mult_order(self):
        assert mult_order(3, 8) == 2
        assert mult_order(2, 7) == 3
        assert mult_order(7, 1) == 1
        with pytest.raises(ValueError):
            mult_order(2, 8)

    def test_legendre_vs_square_enumeration(self):
        for p in PRIMES_BELOW_100[1:]:
            squares = {x * x % p for x in range(1, p)}
            for a in range(p):
                expect = 0 if a == 0 else (1 if a in squares else -1)
                assert legendre(a, p) == expect


class TestSplitting:
    def test_quadratic(self):
        assert splitting_in_quadratic(7, 2) == "split"      # 7 = +-1 mod 8
        assert splitting_in_quadratic(5, 2) == "inert"
        assert splitting_in_quadratic(2, 2) == "ramified"
        assert splitting_in_quadratic(2, -7) == "split"     # -7 = 1 mod 8
        assert splitting_in_quadratic(2, 5) == "inert"
        assert splitting_in_quadratic(3, 3) == "ramified"

    def test_cyclotomic_unramified(self):
        assert splitting_in_cyclotomic(7, 12) == (1, 2, 2)
        assert splitting_in_cyclotomic(13, 12) == (1, 1, 4)
        assert splitting_in_cyclotomic(3, 5) == (1, 4, 1)

    def test_cyclotomic_ramified(self):
        assert splitting_in_cyclotomic(5, 5) == (4, 1, 1)
        assert splitting_in_cyclotomic(2, 12) == (2, 2, 1)
        assert splitting_in_cyclotomic(3, 12) == (2, 2, 1)

    def test_efg_consistency(self):
        for p in (2, 3, 5, 7, 11, 13):
            for m in range(1, 61):
                e, f, g = splitting_in_cyclotomic(p, m)
                assert e * f * g == euler_phi(m)


class TestNewtonSlopes:
    def test_ordinary_elliptic(self):
        q = PrimePower(5, 1)
        f = IntPolynomial([5, -1, 1])
        assert newton_slopes(f, q) == (Fraction(0), Fraction(1))

    def test_supersingular_elliptic(self):
        q = PrimePower(7, 1)
        f = IntPolynomial([7, 0, 1])
        assert newton_slopes(f, q) == (Fraction(1, 2), Fraction(1, 2))

    def test_normalization_by_degree(self):
        q = PrimePower(3, 2)
        f = IntPolynomial([9, -3, 1])
        assert newton_slopes(f, q) == (Fraction(1, 2), Fraction(1, 2))

    def test_mixed_quartic(self):
        q = PrimePower(5, 1)
        f = IntPolynomial([25, 5, 5, 1, 1])
        slopes = newton_slopes(f, q)
        assert sorted(slopes) == [0, Fraction(1, 2), Fraction(1, 2), 1]

    @given(st.sampled_from([(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (7, 2)]),
           st.lists(st.integers(-500, 500), min_size=2, max_size=6))
    @settings(max_examples=200, deadline=None)
    def test_matches_direct_polygon(self, pn, tail):
        q = PrimePower(*pn)
        if tail[0] == 0:
            tail[0] = 1
        f = IntPolynomial(tail + [1])
        assert list(newton_slopes(f, q)) == direct_newton_slopes(f, q)

    def test_functional_equation_symmetry(self):
        # slopes of a Weil polynomial pair up as s and 1 - s
        for q, coeffs in [(PrimePower(5, 1), [25, 5, 2, 1, 1]),
                          (PrimePower(3, 1), [9, 3, 1, 1, 1]),
                          (PrimePower(7, 1), [49, 0, 7, 0, 1])]:
            slopes = sorted(newton_slopes(IntPolynomial(coeffs), q))
            assert slopes == sorted(1 - s for s in slopes)


class TestResultant:
    def test_linear(self):
        f = IntPolynomial([-2, 1])   # t - 2
        g = IntPolynomial([-3, 1])   # t - 3
        assert resultant(f, g) == -1  # (2 - 3) up to convention sign
        assert abs(resultant(f, g)) == 1

    def test_point_count_style(self):
        # Res(t^2 - t + 5, t - 1) = f(1) up to sign
        f = IntPolynomial([5, -1, 1])
        g = IntPolynomial([-1, 1])
        assert abs(resultant(f, g)) == abs(f(1))

    def test_shared_root(self):
        f = IntPolynomial([-1, 0, 1])
        g = IntPolynomial([-1, 1])
        assert resultant(f, g) == 0

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from anyondeg.poly import (
    IntPoly, RationalFn, poly_from_json, poly_from_text, poly_gcd,
    poly_to_json, poly_to_text,
)


def P(*coeffs):
    return IntPoly(coeffs)


small_polys = st.builds(IntPoly, st.lists(st.integers(-9, 9), max_size=6))
nonzero_polys = small_polys.filter(bool)


class TestArithmetic:
    def test_add(self):
        assert P(1, 0, 0, -1) + P(0, 0, 0, 1) == P(1)

    def test_mul(self):
        assert P(1, 0, 0, -1) * P(1, 0, 0, 1) == P(1, 0, 0, 0, 0, 0, -1)

    def test_mul_identity(self):
        assert P(1, 0, 0, -3) * IntPoly.one() == P(1, 0, 0, -3)

    def test_zero_degree_sentinel(self):
        assert IntPoly.zero().degree == -1
        assert P(7).degree == 0
        assert not IntPoly((0, 0))

    def test_canonical_trailing_zeros(self):
        assert IntPoly((1, 2, 0, 0)) == IntPoly((1, 2))

    @given(small_polys, small_polys, small_polys)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @given(small_polys, nonzero_polys)
    def test_exact_div_inverts_mul(self, a, b):
        assert (a * b).exact_div(b) == a

    def test_exact_div_rejects_inexact(self):
        with pytest.raises(ValueError):
            P(1, 1).exact_div(P(0, 1))


class TestGcd:
    def test_cyclotomic_like(self):
        assert poly_gcd(P(1, 0, 0, 0, 0, 0, -1), P(1, 0, 0, -1)) \
            == P(-1, 0, 0, 1)

    def test_monomials(self):
        assert poly_gcd(P(0, 0, 1), P(0, 0, 0, 1)) == P(0, 0, 1)

    def test_coprime_pair(self):
        # denominators of the level-2 system stay in lowest terms
        assert poly_gcd(P(1, 0, 0, -3), P(1, 0, 0, -4, 0, 0, -1)) == P(1)

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            poly_gcd(IntPoly.zero(), IntPoly.zero())

    @given(small_polys, nonzero_polys)
    def test_gcd_divides_both(self, a, b):
        g = poly_gcd(a, b)
        assert g.leading() > 0
        for p in (a, b):
            if not p.is_zero():
                scaled = p * (g.leading() ** (p.degree + 1))
                assert scaled.exact_div(g) * g == scaled


def test_gcd_sign_is_normalized():
    assert poly_gcd(P(1, 0, 0, -1), P(-1, 0, 0, 1)) == P(-1, 0, 0, 1)


class TestRationalFn:
    def test_reduction(self):
        f = RationalFn(P(0, 0, 2, 0, 0, -2), P(2, 0, 0, -2))
        assert f == RationalFn(P(0, 0, 1), IntPoly.one())

    def test_den_constant_term_positive(self):
        f = RationalFn(P(0, 1), P(-1, 0, 0, 1))
        assert f.den[0] > 0

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFn(P(1), IntPoly.zero())

    @given(small_polys, nonzero_polys, nonzero_polys)
    def test_common_factor_invariance(self, num, den, g):
        assert RationalFn(num * g, den * g) == RationalFn(num, den)

    @given(small_polys, nonzero_polys.filter(lambda p: p[0] != 0),
           nonzero_polys)
    def test_series_unchanged_by_scaling(self, num, den, g):
        if g[0] == 0:
            g = g + IntPoly.one()
        base = RationalFn(num, den).series_coeffs(8)
        scaled = RationalFn(num * g, den * g).series_coeffs(8)
        assert base == scaled


class TestSeries:
    def test_simple_period_three(self):
        f = RationalFn(P(1), P(1, 0, 0, -1))
        assert f.series_coeffs(9) == [1, 0, 0, 1, 0, 0, 1, 0, 0, 1]

    def test_level_two_origin_series(self):
        f = RationalFn(P(1, 0, 0, -3), P(1, 0, 0, -4, 0, 0, -1))
        coeffs = f.series_coeffs(18)
        assert [coeffs[n] for n in range(0, 19, 3)] \
            == [1, 1, 5, 21, 89, 377, 1597]
        assert all(coeffs[n] == 0 for n in range(19) if n % 3)

    def test_shifted_series(self):
        f = RationalFn(P(0, 0, 1), P(1, 0, 0, -1))
        assert f.series_coeffs(5) == [0, 0, 1, 0, 0, 1]

    def test_exact_rationals(self):
        f = RationalFn(P(1), P(2, 1))
        assert f.series_coeffs(2) == [
            Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8)]

    def test_singular_at_origin_rejected(self):
        with pytest.raises(ValueError):
            RationalFn(P(1), P(0, 1)).series_coeffs(3)


class TestSerialization:
    def test_text_format(self):
        assert poly_to_text(P(1, 0, 0, -4, 0, 0, -1)) == "1 - 4*t^3 - 1*t^6"
        assert poly_to_text(IntPoly.zero()) == "0"
        assert poly_to_text(P(-2, 1)) == "-2 + 1*t^1"

    @given(small_polys)
    def test_text_round_trip(self, p):
        assert poly_from_text(poly_to_text(p)) == p

    def test_json_decimal_strings(self):
        obj = poly_to_json(P(1, 0, 0, -4, 0, 0, -1))
        assert obj == {"coeffs": ["1", "0", "0", "-4", "0", "0", "-1"]}

    @given(small_polys)
    def test_json_round_trip(self, p):
        assert poly_from_json(poly_to_json(p)) == p

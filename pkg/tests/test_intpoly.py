"""Exact polynomial arithmetic: division, Bezout pairs, resultants."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclokit.intpoly import (
    IntPoly,
    NotCoprimeError,
    ScaledPoly,
    divrem_exact,
    resultant,
    xgcd_rational,
)

X = IntPoly.monomial(1)
ONE = IntPoly.one()

PHI1 = X - ONE
PHI2 = X + ONE
PHI3 = IntPoly((1, 1, 1))
PHI5 = IntPoly((1, 1, 1, 1, 1))
PHI6 = IntPoly((1, -1, 1))
PHI15 = IntPoly((1, -1, 0, 1, -1, 1, 0, -1, 1))

polys = st.lists(st.integers(-9, 9), max_size=12).map(lambda cs: IntPoly(tuple(cs)))
nonzero_polys = polys.filter(lambda p: not p.is_zero)
monic_polys = st.lists(st.integers(-9, 9), max_size=8).map(
    lambda cs: IntPoly(tuple(cs) + (1,))
)


def sylvester_resultant(a: IntPoly, b: IntPoly) -> int:
    """Independent oracle: Fraction Gaussian elimination on the Sylvester matrix."""
    da, db = len(a.coeffs) - 1, len(b.coeffs) - 1
    size = da + db
    if size == 0:
        return 1
    rows = []
    desc_a = list(reversed(a.coeffs))
    desc_b = list(reversed(b.coeffs))
    for i in range(db):
        rows.append([0] * i + desc_a + [0] * (db - 1 - i))
    for i in range(da):
        rows.append([0] * i + desc_b + [0] * (da - 1 - i))
    m = [[Fraction(c) for c in row] for row in rows]
    det = Fraction(1)
    for col in range(size):
        piv = next((i for i in range(col, size) if m[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, size):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    assert det.denominator == 1
    return int(det)


class TestIntPoly:
    def test_trimming_and_degree(self):
        assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPoly(()).degree < -(10**9)
        assert IntPoly((0, 0)).is_zero
        assert IntPoly((3,)).degree == 0

    def test_add_examples(self):
        assert (X - ONE) + (X + ONE) == IntPoly((0, 2))
        p = IntPoly((4, -1, 3))
        assert IntPoly(()) + p == p
        assert IntPoly((0, 0, 1)) + IntPoly((0, 0, -1)) == IntPoly(())

    def test_mul_examples(self):
        assert (X - ONE) * (X + ONE) == IntPoly((-1, 0, 1))
        assert PHI1 * PHI3 == IntPoly((-1, 0, 0, 1))
        full = PHI3 * PHI5 * PHI15 * PHI1
        assert full == IntPoly.monomial(15) - ONE

    def test_eval(self):
        assert PHI3.evaluate(2) == 7
        assert PHI1.evaluate(1) == 0
        assert PHI15.evaluate(2) == 151

    def test_repr_smoke(self):
        assert "X" in repr(PHI15)
        assert repr(IntPoly(())) == "IntPoly('0')"


class TestDivRem:
    def test_quotient_is_phi15(self):
        num = IntPoly.monomial(15) - ONE
        den = PHI1 * PHI3 * PHI5
        q, s = divrem_exact(num, den)
        assert q == PHI15 and s.is_zero
        assert q * den + s == num

    def test_equal_degree(self):
        q, s = divrem_exact(IntPoly((0, 0, 1)), IntPoly((0, 0, 1)))
        assert q == ONE and s.is_zero

    def test_small_by_large(self):
        q, s = divrem_exact(IntPoly((2, 1)), IntPoly.monomial(3))
        assert q.is_zero and s == IntPoly((2, 1))

    def test_rejects_zero_divisor(self):
        with pytest.raises(ValueError):
            divrem_exact(PHI3, IntPoly(()))

    def test_rejects_non_monic(self):
        with pytest.raises(ValueError):
            divrem_exact(PHI3, IntPoly((1, 2)))

    @given(polys, monic_polys)
    def test_roundtrip(self, a, b):
        q, s = divrem_exact(a, b)
        assert q * b + s == a
        assert s.degree < b.degree


class TestXgcd:
    def test_phi3_phi5(self):
        u, v = xgcd_rational(PHI3, PHI5)
        assert u == ScaledPoly(IntPoly((1, 0, 0, 1)), 1)
        # reduction oracle: Phi_3 * (X^3 + 1) = 1 mod Phi_5
        _, rem = divrem_exact(PHI3 * u.num, PHI5)
        assert rem == ONE

    def test_phi5_phi3(self):
        u, _ = xgcd_rational(PHI5, PHI3)
        assert u == ScaledPoly(IntPoly((0, -1)), 1)

    def test_phi3_phi1(self):
        u, v = xgcd_rational(PHI3, PHI1)
        assert u == ScaledPoly(ONE, 3)
        assert v == ScaledPoly(IntPoly((-2, -1)), 3)

    def test_not_coprime(self):
        with pytest.raises(NotCoprimeError):
            xgcd_rational(PHI3 * PHI1, PHI5 * PHI1)

    def test_zero_input(self):
        with pytest.raises(ValueError):
            xgcd_rational(IntPoly(()), PHI3)

    @given(nonzero_polys, nonzero_polys)
    @settings(max_examples=150, deadline=None)
    def test_bezout_identity_and_degree_bounds(self, a, b):
        try:
            u, v = xgcd_rational(a, b)
        except NotCoprimeError:
            return
        lhs = a * u.num * v.den + b * v.num * u.den
        assert lhs == IntPoly.constant(u.den * v.den)
        assert u.num.degree < b.degree
        if a.degree > 0 or b.degree > 0:
            # two nonzero constants admit no pair with both bounds strict
            assert v.num.degree < a.degree


class TestResultant:
    def test_known_values(self):
        assert resultant(PHI1, PHI2) == 2
        assert resultant(PHI6, PHI3) == 4
        assert resultant(PHI3, PHI5) == 1

    def test_zero_inputs_rejected(self):
        with pytest.raises(ValueError):
            resultant(IntPoly(()), PHI3)

    def test_common_factor_gives_zero(self):
        a = (X - ONE) * IntPoly((3, 1))
        b = (X - ONE) * IntPoly((2, 0, 1))
        assert resultant(a, b) == 0

    @given(nonzero_polys, nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_antisymmetry(self, a, b):
        sign = -1 if (len(a.coeffs) - 1) % 2 == 1 and (len(b.coeffs) - 1) % 2 == 1 else 1
        assert resultant(a, b) == sign * resultant(b, a)

    @given(
        st.lists(st.integers(-5, 5), max_size=7).map(lambda cs: IntPoly(tuple(cs))),
        st.lists(st.integers(-5, 5), max_size=7).map(lambda cs: IntPoly(tuple(cs))),
    )
    @settings(max_examples=150, deadline=None)
    def test_matches_sylvester_determinant(self, a, b):
        if a.is_zero or b.is_zero:
            return
        assert resultant(a, b) == sylvester_resultant(a, b)

    def test_matches_sylvester_on_cyclotomics(self):
        pairs = [(PHI1, PHI2), (PHI6, PHI3), (PHI3, PHI5), (PHI15, PHI6), (PHI2, PHI15)]
        for a, b in pairs:
            assert resultant(a, b) == sylvester_resultant(a, b)


class TestScaledPoly:
    def test_normalization(self):
        sp = ScaledPoly(IntPoly((2, 4)), 6)
        assert sp.num == IntPoly((1, 2)) and sp.den == 3

    def test_negative_denominator(self):
        sp = ScaledPoly(IntPoly((1, -1)), -2)
        assert sp.den == 2 and sp.num == IntPoly((-1, 1))

    def test_zero_numerator_forces_unit_denominator(self):
        sp = ScaledPoly(IntPoly(()), 7)
        assert sp.num.is_zero and sp.den == 1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ValueError):
            ScaledPoly(ONE, 0)

    @given(polys, st.integers(-40, 40).filter(bool))
    def test_normalization_idempotent(self, num, den):
        sp = ScaledPoly(num, den)
        assert ScaledPoly(sp.num, sp.den) == sp

    def test_as_intpoly(self):
        assert ScaledPoly(PHI3, 1).as_intpoly() == PHI3
        with pytest.raises(ValueError):
            ScaledPoly(ONE, 3).as_intpoly()

    def test_evaluate(self):
        assert ScaledPoly(IntPoly((1, 1)), 5).evaluate(4) == Fraction(1, 1)

    def test_scaled(self):
        assert ScaledPoly(ONE, 3).scaled(3) == ScaledPoly(ONE, 1)
        assert math.gcd(ScaledPoly(IntPoly((3, 6)), 4).num.content, 4) in (1, 4)

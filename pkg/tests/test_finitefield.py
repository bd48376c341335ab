"""Extension field construction, arithmetic axioms, and subgroup projections."""

import random

import pytest

from cyclokit.cyclotomic import cyclotomic, factorize
from cyclokit.finitefield import (
    ExtField,
    PrimeField,
    make_ext_field,
    multiplicative_order,
    norm_exponent,
    random_nonzero,
    torus_membership,
)
from cyclokit.intpoly import IntPoly


class TestConstruction:
    def test_prime_field_validation(self):
        PrimeField(97)
        with pytest.raises(ValueError):
            PrimeField(91)

    def test_degree_one_modulus_is_x(self):
        assert make_ext_field(7, 1).modulus == IntPoly.monomial(1)

    def test_only_irreducible_quadratic_over_f2(self):
        assert make_ext_field(2, 2).modulus == IntPoly((1, 1, 1))

    def test_determinism(self):
        before = make_ext_field(7, 15).modulus
        make_ext_field.cache_clear()
        assert make_ext_field(7, 15).modulus == before

    def test_rejects_composite_q(self):
        with pytest.raises(ValueError):
            make_ext_field(6, 2)

    def test_rejects_reducible_modulus(self):
        with pytest.raises(ValueError):
            ExtField(PrimeField(2), 2, IntPoly((1, 0, 1)))  # (X + 1)^2 over F_2


class TestArithmetic:
    def test_f4_multiplication(self):
        f = make_ext_field(2, 2)
        x = f.element([0, 1])
        assert x * f.element([1, 1]) == f.one

    def test_lagrange(self):
        rng = random.Random(11)
        for q, n in [(2, 2), (7, 3), (11, 5)]:
            f = make_ext_field(q, n)
            for _ in range(10):
                x = random_nonzero(f, rng)
                assert x ** (q**n - 1) == f.one

    def test_inverse_roundtrip(self):
        rng = random.Random(5)
        f = make_ext_field(7, 5)
        for _ in range(25):
            x = random_nonzero(f, rng)
            assert x ** (-1) * x == f.one
            assert x.inv() * x == f.one

    def test_pow_additivity(self):
        rng = random.Random(9)
        f = make_ext_field(7, 3)
        for _ in range(25):
            x = random_nonzero(f, rng)
            a = rng.randrange(-500, 500)
            b = rng.randrange(-500, 500)
            assert x ** (a + b) == x**a * x**b

    def test_pow_zero_is_one(self):
        f = make_ext_field(7, 3)
        assert f.zero**0 == f.one
        assert f.element([3, 1, 4]) ** 0 == f.one

    def test_field_axioms_sampled(self):
        rng = random.Random(123)
        for q in (2, 7, 11):
            for n in (1, 3, 5, 15):
                f = make_ext_field(q, n)
                for _ in range(4):
                    a = f.element([rng.randrange(q) for _ in range(n)])
                    b = f.element([rng.randrange(q) for _ in range(n)])
                    c = f.element([rng.randrange(q) for _ in range(n)])
                    assert (a * b) * c == a * (b * c)
                    assert a * (b + c) == a * b + a * c
                    assert a + b == b + a and a * b == b * a
                    if not a.is_zero:
                        assert a.inv() * a == f.one

    def test_invert_zero_rejected(self):
        f = make_ext_field(5, 2)
        with pytest.raises(ZeroDivisionError):
            f.zero.inv()
        with pytest.raises(ZeroDivisionError):
            f.zero ** (-2)

    def test_cross_field_rejected(self):
        a = make_ext_field(5, 2).one
        b = make_ext_field(7, 2).one
        with pytest.raises(ValueError):
            a * b

    def test_element_reduction(self):
        f = make_ext_field(2, 2)
        # X^2 reduces to X + 1 under X^2 + X + 1
        assert f.element([0, 0, 1]) == f.element([1, 1])


class TestSubgroups:
    def test_norm_exponent_values(self):
        assert norm_exponent(2, 15, 15) == 217
        assert norm_exponent(2, 15, 1) == 32767

    def test_defining_identity(self):
        for q in (2, 7, 11):
            for k in (1, 3, 5, 15):
                assert cyclotomic(k).evaluate(q) * norm_exponent(q, 15, k) == q**15 - 1

    def test_rejects_non_divisor(self):
        with pytest.raises(ValueError):
            norm_exponent(2, 15, 4)
        with pytest.raises(ValueError):
            norm_exponent(4, 15, 3)

    def test_membership_of_projections(self):
        rng = random.Random(21)
        q, n = 7, 15
        f = make_ext_field(q, n)
        for _ in range(50):
            x = random_nonzero(f, rng)
            for k in (1, 3, 5, 15):
                t = x ** norm_exponent(q, n, k)
                assert torus_membership(t, k)
                assert t ** cyclotomic(k).evaluate(q) == f.one

    def test_identity_in_every_subgroup(self):
        f = make_ext_field(7, 15)
        for k in (1, 3, 5, 15):
            assert torus_membership(f.one, k)

    def test_generator_not_in_torus(self):
        f = make_ext_field(2, 15)
        group = 2**15 - 1
        g = None
        for c in range(2, 300):
            cand = f.element([(c >> i) & 1 for i in range(15)])
            if not cand.is_zero and multiplicative_order(cand) == group:
                g = cand
                break
        assert g is not None
        assert not torus_membership(g, 15)
        assert torus_membership(g ** norm_exponent(2, 15, 15), 15)

    def test_membership_zero_rejected(self):
        f = make_ext_field(7, 15)
        with pytest.raises(ValueError):
            torus_membership(f.zero, 1)

    def test_membership_bad_divisor_rejected(self):
        f = make_ext_field(7, 15)
        with pytest.raises(ValueError):
            torus_membership(f.one, 4)


class TestOrder:
    def test_order_of_one(self):
        assert multiplicative_order(make_ext_field(7, 3).one) == 1

    def test_order_divides_group_order(self):
        rng = random.Random(2)
        f = make_ext_field(3, 4)
        for _ in range(20):
            x = random_nonzero(f, rng)
            o = multiplicative_order(x)
            assert (3**4 - 1) % o == 0
            assert x**o == f.one

    def test_full_order_element_exists_f8(self):
        f = make_ext_field(2, 3)
        orders = set()
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    e = f.element([a, b, c])
                    if not e.is_zero:
                        orders.add(multiplicative_order(e))
        assert 7 in orders

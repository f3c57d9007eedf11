"""Unit tests for Gaussian-integer arithmetic, factoring, and symbols."""

import random
from fractions import Fraction

import pytest

from qlvalue.errors import EvenInput
from qlvalue.gauss import (
    GaussInt,
    GaussRat,
    I,
    ONE,
    UNITS,
    ZERO,
    factor,
    gcd,
    is_primary,
    primary_associate,
    quadratic_symbol,
    quartic_symbol,
    residue_system,
    v2_gauss,
)

P = GaussInt.parse


def rand_gauss(rng, span=40):
    while True:
        g = GaussInt(rng.randint(-span, span), rng.randint(-span, span))
        if g:
            return g


def rand_odd(rng, span=40):
    while True:
        g = rand_gauss(rng, span)
        if g.is_odd():
            return g


class TestParse:
    @pytest.mark.parametrize(
        "text,re,im",
        [
            ("-1+2i", -1, 2),
            ("2i-1", -1, 2),
            ("-3", -3, 0),
            ("i", 0, 1),
            ("-4i+1", 1, -4),
            ("7", 7, 0),
            ("0", 0, 0),
        ],
    )
    def test_examples(self, text, re, im):
        assert P(text) == GaussInt(re, im)

    def test_round_trip(self):
        rng = random.Random(11)
        for _ in range(200):
            g = GaussInt(rng.randint(-99, 99), rng.randint(-99, 99))
            assert P(str(g)) == g

    def test_rejects_garbage(self):
        for text in ("", "x", "1+2j*", "3..5"):
            with pytest.raises(ValueError):
                P(text)


class TestArithmetic:
    def test_ring_laws(self):
        rng = random.Random(5)
        for _ in range(200):
            a, b, c = (rand_gauss(rng) for _ in range(3))
            assert a * (b + c) == a * b + a * c
            assert (a - b) + b == a
            assert a * b == b * a

    def test_division_with_remainder(self):
        rng = random.Random(7)
        for _ in range(200):
            a, b = rand_gauss(rng, 200), rand_gauss(rng, 30)
            r = a % b
            assert b.divides(a - r)
            # round-to-nearest division keeps the remainder small
            assert 2 * r.norm() <= b.norm()

    def test_divexact(self):
        a, b = P("3+7i"), P("1-2i")
        assert (a * b).divexact(b) == a

    def test_norm_multiplicative(self):
        rng = random.Random(9)
        for _ in range(100):
            a, b = rand_gauss(rng), rand_gauss(rng)
            assert (a * b).norm() == a.norm() * b.norm()

    def test_units_and_conj(self):
        assert set(UNITS) == {P("1"), P("-1"), P("i"), P("-i")}
        g = P("3-5i")
        assert g.conj() == P("3+5i")
        assert (g * g.conj()) == GaussInt(g.norm(), 0)


class TestPrimary:
    def test_unique_primary_associate(self):
        rng = random.Random(13)
        for _ in range(200):
            g = rand_odd(rng)
            unit, p = primary_associate(g)
            assert unit * g == p
            assert is_primary(p)
            assert sum(1 for u in UNITS if is_primary(u * g)) == 1

    def test_primary_closure_under_product(self):
        rng = random.Random(17)
        for _ in range(100):
            _, a = primary_associate(rand_odd(rng))
            _, b = primary_associate(rand_odd(rng))
            assert is_primary(a * b)

    def test_even_rejected(self):
        with pytest.raises(EvenInput):
            primary_associate(P("1+i"))


class TestFactor:
    def test_reconstruction(self):
        rng = random.Random(19)
        for _ in range(60):
            g = rand_gauss(rng, 60)
            fac = factor(g)
            z = fac.unit * GaussInt(1, 1).pow(fac.ramified)
            for p, e in fac.factors:
                assert is_primary(p)
                assert e >= 1
                z = z * p.pow(e)
            assert z == g

    def test_radical(self):
        d = P("-3").pow(2) * P("-1+2i")
        fac = factor(d)
        assert fac.radical() in (P("-3") * P("-1+2i"), P("-1+2i") * P("-3"))

    def test_known_splits(self):
        fac = factor(GaussInt(5, 0))
        assert sorted(p.norm() for p, _ in fac.factors) == [5, 5]
        fac = factor(GaussInt(-7, 0))
        assert [(p, e) for p, e in fac.factors] == [(P("-7"), 1)]


class TestSymbols:
    def test_values_are_units_or_zero(self):
        rng = random.Random(23)
        _, pi = primary_associate(P("4+i"))
        for _ in range(100):
            s = quartic_symbol(rand_gauss(rng), pi)
            assert s == ZERO or s in UNITS

    def test_euler_criterion(self):
        # (a/pi)_4 = a^((Npi-1)/4) mod pi for prime pi
        rng = random.Random(29)
        for pi_text in ("-1+2i", "-3", "3+2i", "-4i+1", "-7"):
            pi = P(pi_text)
            e = (pi.norm() - 1) // 4
            for _ in range(25):
                a = rand_gauss(rng)
                s = quartic_symbol(a, pi)
                if s == ZERO:
                    assert not gcd(a, pi).is_unit()
                    continue
                r = ONE
                base = a % pi
                for _ in range(e):
                    r = (r * base) % pi
                assert pi.divides(r - s)

    def test_multiplicative_in_both_arguments(self):
        rng = random.Random(31)
        for _ in range(50):
            _, m1 = primary_associate(rand_odd(rng, 15))
            _, m2 = primary_associate(rand_odd(rng, 15))
            a, b = rand_gauss(rng), rand_gauss(rng)
            assert quartic_symbol(a * b, m1) == quartic_symbol(
                a, m1
            ) * quartic_symbol(b, m1)
            assert quartic_symbol(a, m1 * m2) == quartic_symbol(
                a, m1
            ) * quartic_symbol(a, m2)

    def test_quadratic_is_square_of_quartic(self):
        rng = random.Random(37)
        for _ in range(80):
            _, m = primary_associate(rand_odd(rng, 20))
            a = rand_gauss(rng)
            q4 = quartic_symbol(a, m)
            assert quadratic_symbol(a, m) == q4 * q4


class TestResidueSystem:
    @pytest.mark.parametrize("delta_text", ["-3", "-1+2i", "3+2i", "-7"])
    def test_prime_modulus_counts(self, delta_text):
        delta = P(delta_text)
        rs = residue_system(delta)
        full = rs.full_system()
        # |C| = #units of O/delta; |V| is one element per unit orbit
        assert len(full) == delta.norm() - 1
        assert len(full) == 4 * len(rs.v)

    def test_composite_modulus(self):
        delta = P("-1+2i") * P("-3")
        rs = residue_system(delta)
        full = rs.full_system()
        assert len(full) == (5 - 1) * (9 - 1)
        # coprime, pairwise distinct mod delta, closed under units
        seen = set()
        for c in full:
            assert gcd(c, delta).is_unit()
            r = c % delta
            assert (r.re, r.im) not in seen
            seen.add((r.re, r.im))
        as_set = {(c.re, c.im) for c in full}
        for v in rs.v:
            for u in UNITS:
                w = u * v
                assert (w.re, w.im) in as_set

    def test_primary_representatives(self):
        rs = residue_system(P("-4i+5"))
        for v in rs.v:
            assert is_primary(v)


class TestValuation:
    def test_anchor_values(self):
        assert v2_gauss(GaussInt(2, 0)) == Fraction(1)
        assert v2_gauss(GaussInt(1, 1)) == Fraction(1, 2)
        assert v2_gauss(GaussInt(3, 0)) == Fraction(0)
        assert v2_gauss(GaussInt(0, 4)) == Fraction(2)

    def test_additive_on_products(self):
        rng = random.Random(41)
        for _ in range(100):
            a, b = rand_gauss(rng), rand_gauss(rng)
            assert v2_gauss(a * b) == v2_gauss(a) + v2_gauss(b)


class TestGaussRat:
    def test_of_and_arithmetic(self):
        a = GaussRat.of(P("3+2i"))
        b = GaussRat(Fraction(1, 2), Fraction(-1, 4))
        s = a + b
        assert s.re == Fraction(7, 2) and s.im == Fraction(7, 4)
        p = a * b
        assert p.re == Fraction(3, 2) + Fraction(1, 2)  # 3/2 - (2)(-1/4)i^2
        assert (a - a).re == 0 and (a - a).im == 0

    def test_v_one_plus_i(self):
        # (1+i)-adic valuation: v(1+i) = 1, v(2) = 2
        assert GaussRat.of(GaussInt(1, 1)).v_one_plus_i() == 1
        assert GaussRat.of(GaussInt(2, 0)).v_one_plus_i() == 2
        assert GaussRat(Fraction(1, 2), Fraction(0)).v_one_plus_i() == -2

"""Unit tests for the lemniscatic period and Weierstrass evaluation."""

import random

import mpmath as mp
import pytest

from qlvalue.errors import LatticePoint
from qlvalue.gauss import GaussInt
from qlvalue.lemni import (
    PrecisionCtx,
    omega,
    omega_integral,
    wp,
    wp_pair,
    wp_prime,
)

CTX = PrecisionCtx(bits=128)


def rand_point(rng):
    """A random (c, delta) with delta odd and c not a multiple of delta."""
    while True:
        delta = GaussInt(rng.randint(-20, 20), rng.randint(-20, 20))
        if not delta.is_odd() or delta.is_unit():
            continue
        c = GaussInt(rng.randint(-50, 50), rng.randint(-50, 50))
        if not delta.divides(c):
            return c, delta


class TestOmega:
    def test_value(self):
        with mp.workprec(160):
            om = omega(CTX)
            assert str(om).startswith("2.6220575")

    def test_agm_matches_integral(self):
        with mp.workprec(160):
            assert abs(omega(CTX) - omega_integral(CTX)) < mp.mpf(2) ** -100


class TestPrecisionCtx:
    def test_minimum_bits(self):
        with pytest.raises(ValueError):
            PrecisionCtx(bits=32)

    def test_tail_terms_default_positive(self):
        assert PrecisionCtx(bits=128).tail_terms > 0
        assert PrecisionCtx(bits=512).tail_terms > PrecisionCtx(128).tail_terms

    def test_double(self):
        assert PrecisionCtx(bits=100).double().bits == 200


class TestGoldenValues:
    def test_quarter_period(self):
        with mp.workprec(160):
            s2 = mp.sqrt(2)
            tol = mp.mpf(2) ** -118
            p, pp = wp_pair(GaussInt(1, 0), GaussInt(4, 0), CTX)
            assert abs(p - (1 + s2)) < tol
            assert abs(pp - (-4 - 2 * s2)) < tol

    def test_one_plus_2i_quarter(self):
        with mp.workprec(160):
            s2 = mp.sqrt(2)
            tol = mp.mpf(2) ** -118
            p, pp = wp_pair(GaussInt(1, 2), GaussInt(4, 0), CTX)
            assert abs(p - (1 - s2)) < tol
            assert abs(pp - (4 - 2 * s2)) < tol


class TestFunctionalIdentities:
    def test_differential_equation(self):
        # wp'^2 = 4 wp^3 - 4 wp on y^2 = x^3 - x
        rng = random.Random(43)
        with mp.workprec(160):
            tol = mp.mpf(2) ** -100
            for _ in range(25):
                c, delta = rand_point(rng)
                p, pp = wp_pair(c, delta, CTX)
                assert abs(pp * pp - (4 * p**3 - 4 * p)) < tol

    def test_periodicity(self):
        rng = random.Random(47)
        with mp.workprec(160):
            tol = mp.mpf(2) ** -110
            for _ in range(10):
                c, delta = rand_point(rng)
                shift = delta * GaussInt(rng.randint(-3, 3), rng.randint(-3, 3))
                p1, pp1 = wp_pair(c, delta, CTX)
                p2, pp2 = wp_pair(c + shift, delta, CTX)
                assert abs(p1 - p2) < tol and abs(pp1 - pp2) < tol

    def test_multiplication_by_i(self):
        # wp(iz) = -wp(z), wp'(iz) = i wp'(z) on the square lattice
        rng = random.Random(53)
        with mp.workprec(160):
            tol = mp.mpf(2) ** -110
            for _ in range(25):
                c, delta = rand_point(rng)
                p1, pp1 = wp_pair(c, delta, CTX)
                p2, pp2 = wp_pair(GaussInt(0, 1) * c, delta, CTX)
                assert abs(p2 + p1) < tol
                assert abs(pp2 - 1j * pp1) < tol

    def test_evenness(self):
        rng = random.Random(59)
        with mp.workprec(160):
            tol = mp.mpf(2) ** -110
            for _ in range(25):
                c, delta = rand_point(rng)
                p1, pp1 = wp_pair(c, delta, CTX)
                p2, pp2 = wp_pair(GaussInt(0, 0) - c, delta, CTX)
                assert abs(p2 - p1) < tol
                assert abs(pp2 + pp1) < tol

    def test_conjugation(self):
        # real lattice: wp(conj z) = conj(wp(z))
        rng = random.Random(61)
        with mp.workprec(160):
            tol = mp.mpf(2) ** -110
            for _ in range(25):
                c, delta = rand_point(rng)
                p1, pp1 = wp_pair(c, delta, CTX)
                p2, pp2 = wp_pair(c.conj(), delta.conj(), CTX)
                assert abs(p2 - mp.conj(p1)) < tol
                assert abs(pp2 - mp.conj(pp1)) < tol


class TestPrecisionScaling:
    def test_doubling_agrees(self):
        rng = random.Random(67)
        hi = PrecisionCtx(bits=256)
        with mp.workprec(300):
            tol = mp.mpf(2) ** -120
            for _ in range(10):
                c, delta = rand_point(rng)
                p1, _ = wp_pair(c, delta, CTX)
                p2, _ = wp_pair(c, delta, hi)
                assert abs(p1 - p2) < tol


class TestErrors:
    def test_lattice_point_rejected(self):
        with pytest.raises(LatticePoint):
            wp(GaussInt(6, 0), GaussInt(3, 0), CTX)

    def test_wp_and_wp_prime_match_pair(self):
        c, delta = GaussInt(2, 1), GaussInt(-3, 4)
        with mp.workprec(160):
            p, pp = wp_pair(c, delta, CTX)
            assert wp(c, delta, CTX) == p
            assert wp_prime(c, delta, CTX) == pp

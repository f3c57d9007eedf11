"""Unit tests for the finite-sum evaluators, recognition, and bounds."""

from fractions import Fraction

import mpmath as mp
import pytest

from qlvalue.errors import ConductorMismatch, Unrecognized
from qlvalue.gauss import GaussInt, ONE
from qlvalue.hecke import decompose
from qlvalue.lemni import PrecisionCtx
from qlvalue.lvalue import (
    Val2,
    bound,
    check_bound,
    default_ctx,
    divisor_sum_check,
    finite_sum_corollary,
    finite_sum_theorem,
    l2_value,
    recognize,
    tree_sum,
)

P = GaussInt.parse


class TestVal2:
    def test_rendering(self):
        assert str(Val2.finite(Fraction(-1, 2))) == "-1/2"
        assert str(Val2.finite(Fraction(3))) == "3"
        assert str(Val2.infinite(128)) == "inf"

    def test_meets(self):
        assert Val2.finite(Fraction(1, 2)).meets(Fraction(1, 2))
        assert not Val2.finite(Fraction(-1)).meets(Fraction(-1, 2))
        assert Val2.infinite(96).meets(Fraction(100))


class TestTreeSum:
    def test_matches_plain_sum(self):
        with mp.workprec(64):
            xs = [mp.mpf(k) / 7 for k in range(101)]
            assert abs(tree_sum(xs) - sum(xs)) < mp.mpf(2) ** -40

    def test_empty(self):
        assert tree_sum([]) == 0


class TestFiniteSum:
    def test_anchor(self):
        ctx = PrecisionCtx(bits=192)
        with mp.workprec(260):
            val = finite_sum_theorem(ONE, P("-3"), ctx)
            assert abs(val + mp.sqrt(2)) < mp.mpf(2) ** -96

    def test_conductor_mismatch(self):
        ctx = PrecisionCtx(bits=128)
        with pytest.raises(ConductorMismatch):
            finite_sum_theorem(P("-1+2i"), P("-3"), ctx)

    def test_corollary_agrees_all_symbol_classes(self):
        with mp.workprec(200):
            tol = mp.mpf(2) ** -64
            # i_symbol classes: i, -1, -i, 1 respectively
            for d_text in ("-1+2i", "-3", "3-2i", "1-4i"):
                d = P(d_text)
                ctx = default_ctx(d, 160)
                a = finite_sum_theorem(d, d, ctx)
                b = finite_sum_corollary(d, d, ctx)
                assert abs(a - b) < tol


class TestL2Value:
    @pytest.mark.parametrize(
        "d_text,v2_text",
        [
            ("-1+2i", "-1/2"),
            ("-3", "0"),
            ("3-2i", "-1/2"),
            ("1-4i", "inf"),
            ("9-4i", "1"),
        ],
    )
    def test_table_values(self, d_text, v2_text):
        assert str(l2_value(P(d_text)).v2) == v2_text

    def test_unit_twist(self):
        # L(psi_-1-bar, 1)/Omega = 1/(2 sqrt 2), valuation -3/2
        lv = l2_value(ONE)
        assert lv.v2.value == Fraction(-3, 2)

    def test_square_twist(self):
        # D = (2i-1)^2: square case, v2 meets (2r-3)/2 = -1/2 exactly
        d = P("-1+2i").pow(2)
        assert str(l2_value(d).v2) == "-1/2"
        assert check_bound(d).ok


class TestRecognition:
    def test_branch_reported(self):
        lv = l2_value(P("-1+2i"))
        assert lv.status == "recognized"
        assert lv.residual < 1e-20

    def test_doubled_precision_stable(self):
        for d_text in ("-1+2i", "-3", "9-4i"):
            d = P(d_text)
            lo = l2_value(d)
            hi = l2_value(d, ctx=default_ctx(decompose(d).delta).double())
            assert (lo.g, lo.m, lo.sqrt2_flag) == (hi.g, hi.m, hi.sqrt2_flag)

    def test_zero_detection(self):
        lv = l2_value(P("1-4i"))
        assert lv.v2.is_infinite
        assert lv.status == "zero"

    def test_garbage_rejected(self):
        ctx = PrecisionCtx(bits=128)
        with mp.workprec(160):
            with pytest.raises(Unrecognized):
                recognize(mp.mpc(mp.pi) / 7, P("-3"), ctx)


class TestBound:
    def test_formula(self):
        assert bound(decompose(P("-1+2i"))) == Fraction(-1, 2)
        assert bound(decompose(P("-1+2i") * P("-3"))) == Fraction(0)
        # square twist: (2r-3)/2
        assert bound(decompose(P("-3").pow(2))) == Fraction(-1, 2)

    def test_check_bound(self):
        rep = check_bound(P("-1+2i"))
        assert rep.ok and rep.lower == Fraction(-1, 2)
        rep = check_bound(P("-3"))
        assert rep.ok and rep.v2.value == Fraction(0)


class TestDivisorSum:
    def test_single_minus_one_class_prime(self):
        rep = divisor_sum_check(decompose(P("-3")))
        assert rep.lower == Fraction(0)
        assert rep.min_conjugate_v2 == Fraction(0)
        assert rep.ok

    def test_pair_of_primes(self):
        rep = divisor_sum_check(decompose(P("-1+2i") * P("3-2i")))
        assert rep.lower == Fraction(1, 2)
        assert rep.ok
        assert rep.n_terms == 4

    def test_single_i_class_prime_falls_short(self):
        # Empirical: for (i/D)_4 = i the divisor sum has a conjugate of
        # valuation -1/8, below the stated n=1 bound of 0 (but above the
        # -1/2 needed by the main theorem's induction).
        rep = divisor_sum_check(decompose(P("-1+2i")))
        assert rep.min_conjugate_v2 == Fraction(-1, 8)
        assert not rep.ok

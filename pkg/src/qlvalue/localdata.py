"""Local reduction data of E_-D: y^2 = x^3 + Dx over Q(i).

Reduction types are table lookups keyed by residue symbols; the
classification was carried out once for the whole family, so re-running
Tate's algorithm per twist would add nothing but failure modes.  The
minimal model at 1+i in the good-reduction case is constructed exactly
and its discriminant checked in Gaussian-rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotGoodAt2
from .gauss import (
    GaussInt,
    GaussRat,
    ONE,
    ONE_PLUS_I,
    TWO_PLUS_2I,
    quadratic_symbol,
)
from .hecke import decompose

__all__ = [
    "LocalData",
    "MinimalModel2",
    "good_reduction_at_2",
    "local_data",
    "conductor",
    "minimal_model_at_2",
]

_I = GaussInt(0, 1)

# (kodaira, m, v, f, c) at 1+i, keyed by (i/D)_4.
_AT_TWO = {
    GaussInt(1, 0): ("I0*", 5, 12, 8, 2),
    GaussInt(-1, 0): ("I0*", 5, 12, 8, 2),
    GaussInt(0, 1): ("I0", 1, 0, 0, 1),
    GaussInt(0, -1): ("II*", 9, 12, 4, 1),
}

# Rows at odd primes, keyed by exponent class (and quadratic symbol for
# the squared class).
_AT_ODD = {
    1: ("III", 2, 3, 2, 2),
    (2, 1): ("I0*", 5, 6, 2, 4),
    (2, -1): ("I0*", 5, 6, 2, 2),
    3: ("III*", 8, 9, 2, 2),
}


@dataclass(frozen=True)
class LocalData:
    place: GaussInt
    kodaira: str
    m: int
    v: int
    f: int
    c: int


@dataclass(frozen=True)
class MinimalModel2:
    """Minimal Weierstrass model of E_-D at 1+i when (i/D)_4 = i."""

    a1: GaussRat
    a2: GaussRat
    a3: GaussRat
    a4: GaussRat
    a6: GaussRat
    s_parity: str  # "even" | "odd"

    def discriminant(self) -> GaussRat:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        four = GaussRat(Fraction(4), Fraction(0))
        b2 = a1 * a1 + four * a2
        b4 = a1 * a3 + a4 + a4
        b6 = a3 * a3 + four * a6
        b8 = a1 * a1 * a6 + four * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        nine = GaussRat(Fraction(9), Fraction(0))
        return (
            -(b2 * b2 * b8)
            - (b4 * b4 * b4).scale(Fraction(8))
            - (b6 * b6).scale(Fraction(27))
            + nine * b2 * b4 * b6
        )


def good_reduction_at_2(d: GaussInt) -> bool:
    """E_-D has good reduction at 1+i exactly when (i/D)_4 = i."""
    dec = decompose(d)
    return dec.i_symbol == _I


def local_data(d: GaussInt) -> list[LocalData]:
    """One record at 1+i plus one per odd prime of D, from the tables."""
    dec = decompose(d)
    rows = [LocalData(ONE_PLUS_I, *_AT_TWO[dec.i_symbol])]
    seen = []
    for p in dec.s1:
        seen.append((p, _AT_ODD[1]))
    for p in dec.s2:
        cofactor = d.divexact(p * p)
        sym = quadratic_symbol(cofactor, p)
        key = (2, 1) if sym == ONE else (2, -1)
        seen.append((p, _AT_ODD[key]))
    for p in dec.s3:
        seen.append((p, _AT_ODD[3]))
    seen.sort(key=lambda pr: (pr[0].norm(), pr[0].re, pr[0].im))
    rows.extend(LocalData(p, *row) for p, row in seen)
    return rows


def conductor(d: GaussInt) -> list[tuple[GaussInt, int]]:
    """Conductor of E_-D as (prime, exponent) pairs, 1+i first if present."""
    out = []
    for rec in local_data(d):
        if rec.f:
            out.append((rec.place, rec.f))
    return out


def minimal_model_at_2(d: GaussInt) -> MinimalModel2:
    """The 1+i-minimal model in the good-reduction case (i/D)_4 = i.

    Writing D = 1 + (2+2i)(s+ti), the equation branches on the parity
    of s; both branches are integral at 1+i with unit discriminant there.
    """
    dec = decompose(d)
    if dec.i_symbol != _I:
        raise NotGoodAt2(f"(i/{d})_4 = {dec.i_symbol}, not i")
    q = (d - ONE).divexact(TWO_PLUS_2I)
    s, t = q.re, q.im
    dd = GaussRat.of(d)
    i_rat = GaussRat.of(_I)
    one = GaussRat.of(ONE)
    if s % 2 == 0:
        model = MinimalModel2(
            a1=GaussRat.of(GaussInt(1, -1)),
            a2=-i_rat,
            a3=-i_rat,
            a4=-(dd + one - i_rat.scale(Fraction(2))).scale(Fraction(1, 4)),
            a6=(i_rat * dd + GaussRat.of(GaussInt(2, 1))).scale(Fraction(1, 8)),
            s_parity="even",
        )
    else:
        model = MinimalModel2(
            a1=GaussRat.of(GaussInt(1, -1)),
            a2=-i_rat,
            a3=GaussRat.of(GaussInt(1, -2)),
            a4=-(dd + one - i_rat.scale(Fraction(6))).scale(Fraction(1, 4)),
            a6=(i_rat * dd + GaussRat.of(GaussInt(6, 9))).scale(Fraction(1, 8)),
            s_parity="odd",
        )
    for coef in (model.a1, model.a2, model.a3, model.a4, model.a6):
        if coef.re == 0 and coef.im == 0:
            continue
        assert coef.v_one_plus_i() >= 0, f"coefficient {coef} not integral at 1+i"
    disc = model.discriminant()
    assert disc.v_one_plus_i() == 0, "discriminant not a unit at 1+i"
    return model

"""Twist decomposition and the Hecke character of E_-D: y^2 = x^3 + Dx.

The twist parameter is split into exponent classes D1*D2^2*D3^3, the
character is evaluated on primary generators via the quartic symbol, and
the omitted Euler factors are computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DividesD, EvenInput, NotPrimary, NotQuarticFree
from .gauss import (
    GaussInt,
    ONE,
    I,
    UNITS,
    factor,
    is_primary,
    primary_associate,
    quartic_symbol,
    v2_gauss,
)

__all__ = [
    "TwistDecomposition",
    "HeckeValue",
    "EulerFactor",
    "NormalizedTwist",
    "normalize_twist",
    "decompose",
    "sgn",
    "epsilon",
    "psi_eval",
    "psi_via_lemma",
    "euler_factor",
]

_FOUR = GaussInt(4, 0)
_THREE_PLUS_2I = GaussInt(3, 2)
_MINUS_ONE = GaussInt(-1, 0)


@dataclass(frozen=True)
class NormalizedTwist:
    """Result of bringing a raw twist parameter to primary quartic-free form."""

    d: GaussInt
    unit: GaussInt
    quartic_part: GaussInt | None = None


def normalize_twist(d_raw: GaussInt) -> NormalizedTwist:
    """The unique primary associate of d_raw, with fourth powers stripped.

    E_-D and E_-(d^4 D) are isomorphic over Q(i), so the quartic part is
    removed and reported rather than rejected.
    """
    if not d_raw or not d_raw.is_odd():
        raise EvenInput(f"{d_raw} is divisible by 1+i")
    fac = factor(d_raw)
    stripped = ONE
    reduced = d_raw
    for p, e in fac.factors:
        if e >= 4:
            k = e // 4
            stripped = stripped * p.pow(k)
            reduced = reduced.divexact(p.pow(4 * k))
    unit, primary = primary_associate(reduced)
    return NormalizedTwist(
        d=primary,
        unit=unit,
        quartic_part=None if stripped.is_unit() else stripped,
    )


@dataclass(frozen=True)
class TwistDecomposition:
    """D = prod(S1) * prod(S2)^2 * prod(S3)^3 with per-class radicals."""

    d: GaussInt
    s1: tuple[GaussInt, ...]
    s2: tuple[GaussInt, ...]
    s3: tuple[GaussInt, ...]
    delta1: GaussInt
    delta2: GaussInt
    delta3: GaussInt
    delta: GaussInt
    r: int
    i_symbol: GaussInt
    chi: GaussInt
    sgn_delta: int
    epsilon: int
    is_square: bool

    @property
    def primes(self) -> tuple[GaussInt, ...]:
        return self.s1 + self.s2 + self.s3


def sgn(delta: GaussInt) -> int:
    """+1 if delta = 1 mod 4, -1 if delta = 3+2i mod 4.

    Total on primary elements: every primary odd element falls in
    exactly one of the two classes.
    """
    if not is_primary(delta):
        raise NotPrimary(f"{delta} is not primary")
    if not ((delta - ONE) % _FOUR):
        return 1
    if not ((delta - _THREE_PLUS_2I) % _FOUR):
        return -1
    raise AssertionError(f"primary element {delta} escaped the mod-4 classes")


def epsilon(d_t: GaussInt, delta: GaussInt) -> int:
    """The sign sgn(Delta) * (-1/D_T)_4 ^ ((1+sgn(Delta))/2)."""
    s = sgn(delta)
    if s == -1:
        return -1
    sym = quartic_symbol(_MINUS_ONE, d_t)
    if sym == ONE:
        return 1
    if sym == _MINUS_ONE:
        return -1
    raise AssertionError(f"(-1/{d_t})_4 is not real")


def decompose(d: GaussInt) -> TwistDecomposition:
    """Split a primary quartic-free non-unit D into exponent classes."""
    if not d or not d.is_odd():
        raise EvenInput(f"{d} is divisible by 1+i")
    if not is_primary(d):
        raise NotPrimary(f"{d} is not primary; use normalize_twist first")
    if d.is_unit():
        raise ValueError("unit twist has no decomposition")
    fac = factor(d)
    buckets: dict[int, list[GaussInt]] = {1: [], 2: [], 3: []}
    for p, e in fac.factors:
        if e >= 4:
            raise NotQuarticFree(f"{p}^{e} divides {d}")
        buckets[e].append(p)
    s1, s2, s3 = (tuple(buckets[k]) for k in (1, 2, 3))

    def prod(primes: tuple[GaussInt, ...]) -> GaussInt:
        z = ONE
        for p in primes:
            z = z * p
        return z

    d1, d2, d3 = prod(s1), prod(s2), prod(s3)
    delta = d1 * d2 * d3
    return TwistDecomposition(
        d=d,
        s1=s1,
        s2=s2,
        s3=s3,
        delta1=d1,
        delta2=d2,
        delta3=d3,
        delta=delta,
        r=len(s1) + len(s2) + len(s3),
        i_symbol=quartic_symbol(I, d),
        chi=quartic_symbol(GaussInt(1, 1), d),
        sgn_delta=sgn(delta),
        epsilon=epsilon(d, delta),
        is_square=not s1 and not s3,
    )


@dataclass(frozen=True)
class HeckeValue:
    """psi_-D evaluated at a principal ideal with primary generator `at`."""

    value: GaussInt
    at: GaussInt


def psi_eval(d: GaussInt, alpha: GaussInt) -> HeckeValue:
    """psi_-D((alpha)) = conj((-D/alpha)_4) * alpha for primary alpha.

    Returns 0 when alpha shares a prime with D (bad reduction).
    """
    if not is_primary(alpha):
        raise NotPrimary(f"{alpha} is not primary")
    sym = quartic_symbol(-d, alpha)
    return HeckeValue(value=sym.conj() * alpha, at=alpha)


def psi_via_lemma(d_t: GaussInt, delta: GaussInt, c: GaussInt) -> GaussInt:
    """psi_-D_T((4c+Delta)) = eps_T * conj((c/D_T)_4) * (4c+Delta)."""
    eps = epsilon(d_t, delta)
    sym = quartic_symbol(c, d_t)
    g = sym.conj() * (_FOUR * c + delta)
    return g if eps == 1 else -g


@dataclass(frozen=True)
class EulerFactor:
    """Exact value (numerator/denominator in Q(i)) of 1 - conj(psi(pi))/Npi."""

    numerator: GaussInt
    denominator: int
    v2: Fraction


def euler_factor(d: GaussInt, pi: GaussInt) -> EulerFactor:
    """The omitted Euler factor of L(psi_-D-bar, 1) at a good prime pi."""
    if not is_primary(pi):
        raise NotPrimary(f"{pi} is not primary")
    if pi.divides(d):
        raise DividesD(f"{pi} divides {d}")
    n = pi.norm()
    psi = psi_eval(d, pi).value
    num = GaussInt(n, 0) - psi.conj()
    return EulerFactor(numerator=num, denominator=n, v2=v2_gauss(num))

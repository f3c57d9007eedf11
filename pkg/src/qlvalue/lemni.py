"""Arbitrary-precision evaluation on the lemniscatic lattice Omega*Z[i].

Omega is the least positive real period of y^2 = x^3 - x.  The
Weierstrass functions are evaluated at torsion points c*Omega/Delta by
the q-series for the square lattice (tau = i, q = e^{-2*pi}), after exact
argument reduction in Z[i].
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import LatticePoint, PrecisionTooLow
from .gauss import GaussInt

__all__ = ["PrecisionCtx", "omega", "omega_integral", "wp", "wp_prime", "wp_pair"]

# bits contributed per series term: the k-th Lambert coefficient times
# u^{+-k} is bounded by e^{-2*pi*k*(1-|Im w|)} with |Im w| <= 1/2, so the
# guaranteed rate is pi nats per term (the corner of the unit cell).
_BITS_PER_TERM = math.pi * math.log2(math.e)
_GUARD_BITS = 16


def _default_tail(bits: int) -> int:
    return math.ceil(bits / _BITS_PER_TERM) + 8


@dataclass(frozen=True)
class PrecisionCtx:
    """Working precision in bits plus the q-series truncation length."""

    bits: int = 128
    tail_terms: int = 0

    def __post_init__(self):
        if self.bits < 64:
            raise ValueError("precision must be at least 64 bits")
        if self.tail_terms <= 0:
            object.__setattr__(self, "tail_terms", _default_tail(self.bits))

    def double(self) -> "PrecisionCtx":
        return PrecisionCtx(bits=2 * self.bits)


def omega(ctx: PrecisionCtx) -> mp.mpf:
    """The lemniscatic period 2.6220575..., via pi / agm(1, sqrt 2)."""
    with mp.workprec(ctx.bits + _GUARD_BITS):
        return +(mp.pi / mp.agm(1, mp.sqrt(2)))


def omega_integral(ctx: PrecisionCtx) -> mp.mpf:
    """The defining integral of the period, int_1^inf dx/sqrt(x^3-x).

    Substituting x = 1+u^2 removes the endpoint singularity:
    int_0^inf 2 du / sqrt((1+u^2)(2+u^2)).  Kept as an independent
    cross-check of omega().
    """
    with mp.workprec(2 * (ctx.bits + _GUARD_BITS)):
        val = mp.quad(
            lambda u: 2 / mp.sqrt((1 + u * u) * (2 + u * u)), [0, mp.inf]
        )
    with mp.workprec(ctx.bits + _GUARD_BITS):
        return +val


def _reduced_argument(c: GaussInt, delta: GaussInt) -> tuple[Fraction, Fraction]:
    """c/delta as an exact point of [-1/2, 1/2)^2, reduced mod Z[i]."""
    c = c % delta
    if not c:
        raise LatticePoint(f"{delta} divides the argument")
    n = delta.norm()
    num = c * delta.conj()
    w = [Fraction(num.re, n), Fraction(num.im, n)]
    return tuple(x - math.floor(x + Fraction(1, 2)) for x in w)


_cache_lock = threading.Lock()
_wp_cache: dict[tuple, tuple] = {}
_CACHE_LIMIT = 300_000


def clear_cache() -> None:
    with _cache_lock:
        _wp_cache.clear()


_static_cache: dict[tuple, tuple] = {}


def _statics(bits: int, tail_terms: int):
    """c-independent series data per precision.

    Lambert expansion on the square lattice (q = e^{-2*pi}):
      s  = 1/12 - 2*sum c_k  +  u/(1-u)^2  +  sum c_k*(u^k + u^-k)
      s' = u(1+u)/(1-u)^3    +  sum d_k*(u^k - u^-k)
    with real coefficients c_k = k*q^k/(1-q^k), d_k = k*c_k, and
    wp = scale_p * s, wp' = scale_pp * s'.
    """
    key = (bits, tail_terms)
    hit = _static_cache.get(key)
    if hit is not None:
        return hit
    with mp.workprec(bits + _GUARD_BITS):
        q = mp.exp(-2 * mp.pi)
        c_coef = []
        d_coef = []
        qk = mp.mpf(1)
        base = mp.mpf(1) / 12
        for k in range(1, tail_terms + 1):
            qk *= q
            ck = k * qk / (1 - qk)
            c_coef.append(ck)
            d_coef.append(k * ck)
            base -= 2 * ck
        om = mp.pi / mp.agm(1, mp.sqrt(2))
        two_pi_i = 2j * mp.pi
        scale_p = +(two_pi_i**2 / om**2)
        scale_pp = +(two_pi_i**3 / om**3)
    result = (c_coef, d_coef, base, scale_p, scale_pp)
    with _cache_lock:
        _static_cache[key] = result
    return result


def _wp_raw(wx: Fraction, wy: Fraction, ctx: PrecisionCtx):
    """(wp, wp') at w = wx + i*wy on the unit lattice Z[i], times Omega scaling."""
    key = (wx, wy, ctx.bits, ctx.tail_terms)
    with _cache_lock:
        hit = _wp_cache.get(key)
    if hit is not None:
        return hit
    c_coef, d_coef, base, scale_p, scale_pp = _statics(ctx.bits, ctx.tail_terms)
    # Convergence rate depends on the distance of Im w from the cell edge.
    rate = 2.0 * math.pi * (1.0 - abs(float(wy))) * math.log2(math.e)
    need = min(
        len(c_coef), math.ceil((ctx.bits + _GUARD_BITS) / rate) + 4
    )
    with mp.workprec(ctx.bits + _GUARD_BITS):
        w = mp.mpc(
            mp.mpf(wx.numerator) / wx.denominator,
            mp.mpf(wy.numerator) / wy.denominator,
        )
        u = mp.exp(2j * mp.pi * w)
        uinv = 1 / u
        one_minus_u = 1 - u
        if abs(one_minus_u) < mp.mpf(2) ** (-(ctx.bits // 2)):
            raise PrecisionTooLow("argument too close to a lattice point")
        inv = 1 / one_minus_u
        inv2 = inv * inv
        s = base + u * inv2
        sp = u * (1 + u) * inv2 * inv
        uk = u
        uik = uinv
        for k in range(need):
            if k:
                uk *= u
                uik *= uinv
            s += c_coef[k] * (uk + uik)
            sp += d_coef[k] * (uk - uik)
        p_val = +(scale_p * s)
        pp_val = +(scale_pp * sp)
    result = (p_val, pp_val)
    with _cache_lock:
        if len(_wp_cache) >= _CACHE_LIMIT:
            _wp_cache.clear()
        _wp_cache[key] = result
    return result


_HALF = Fraction(1, 2)


def _rereduce(x: Fraction) -> Fraction:
    return x - math.floor(x + _HALF)


def wp_pair(c: GaussInt, delta: GaussInt, ctx: PrecisionCtx):
    """(wp(z), wp'(z)) at z = c*Omega/Delta on the lattice Omega*Z[i].

    The lattice is square with real invariants, so wp(iz) = -wp(z),
    wp'(iz) = i*wp'(z), and wp(conj z) = conj(wp(z)); each orbit of up to
    eight arguments costs one series evaluation.  The representative with
    the smallest |Im| also converges fastest.
    """
    wx, wy = _reduced_argument(c, delta)
    # candidates (rep, transform, conjugated) with z = transform(conj?(rep))
    rots = [
        ((wx, wy), 0),  # z = rep
        ((_rereduce(-wx), _rereduce(-wy)), 1),  # z = -rep
        ((_rereduce(wy), _rereduce(-wx)), 2),  # z = i*rep
        ((_rereduce(-wy), _rereduce(wx)), 3),  # z = -i*rep
    ]
    cands = [(v, t, 0) for v, t in rots] + [
        ((vx, _rereduce(-vy)), t, 1) for (vx, vy), t in rots
    ]
    (rx, ry), t, flip = min(cands, key=lambda cv: (abs(cv[0][1]), cv[0], cv[1:]))
    p, pp = _wp_raw(rx, ry, ctx)
    if flip:
        p, pp = mp.conj(p), mp.conj(pp)
    if t == 0:
        return p, pp
    if t == 1:
        return p, -pp
    if t == 2:
        return -p, 1j * pp
    return -p, -1j * pp


def wp(c: GaussInt, delta: GaussInt, ctx: PrecisionCtx):
    return wp_pair(c, delta, ctx)[0]


def wp_prime(c: GaussInt, delta: GaussInt, ctx: PrecisionCtx):
    return wp_pair(c, delta, ctx)[1]

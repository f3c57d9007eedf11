"""Central L-values of quartic twists: finite sums, recognition, bounds.

The central object is (eps_T * Delta / Omega) * L_{2Delta}(psi_-D_T-bar, 1),
computed as a finite sum of Weierstrass values over a residue system mod
Delta, then matched to an exact algebraic form to read off its 2-adic
valuation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2

import mpmath as mp

from . import lemni
from .errors import ConductorMismatch, NotPrimary, Unrecognized
from .gauss import (
    GaussInt,
    ONE,
    UNITS,
    ZERO,
    factor,
    is_primary,
    quartic_symbol,
    residue_system,
    v2_gauss,
)
from .hecke import TwistDecomposition, decompose, epsilon
from .lemni import PrecisionCtx, wp_pair

__all__ = [
    "Val2",
    "AlgebraicLValue",
    "BoundReport",
    "DivisorSumReport",
    "finite_sum_theorem",
    "finite_sum_corollary",
    "recognize",
    "l2_value",
    "bound",
    "check_bound",
    "divisor_sum_check",
    "default_ctx",
]

_SQRT2 = "sqrt2"


@dataclass(frozen=True)
class Val2:
    """A 2-adic valuation: a half-integer, or +infinity for numerical zero."""

    value: Fraction | None
    zero_bits: int | None = None

    @classmethod
    def finite(cls, v: Fraction) -> "Val2":
        if 2 * v != int(2 * v):
            raise ValueError(f"{v} is not a half-integer")
        return cls(value=Fraction(v))

    @classmethod
    def infinite(cls, bits: int) -> "Val2":
        return cls(value=None, zero_bits=bits)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def meets(self, lower: Fraction) -> bool:
        return self.is_infinite or self.value >= lower

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/2"


def default_ctx(delta: GaussInt, bits: int | None = None) -> PrecisionCtx:
    """Precision policy: sum length and cancellation grow with norm(Delta)."""
    needed = max(128, 96 + 2 * ceil(log2(max(2, delta.norm()))))
    return PrecisionCtx(bits=max(bits or 0, needed))


def tree_sum(terms):
    """Deterministic pairwise reduction; independent of chunking/threading."""
    if not terms:
        return mp.mpc(0)
    layer = list(terms)
    while len(layer) > 1:
        nxt = [layer[i] + layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def _to_mpc(g: GaussInt) -> mp.mpc:
    return mp.mpc(g.re, g.im)


def _prime_symbol_fn(p: GaussInt):
    """(c/p)_4 with the symbol cached per residue class mod p."""
    table: dict[tuple[int, int], GaussInt] = {}

    def sym(c: GaussInt) -> GaussInt:
        r = c % p
        key = (r.re, r.im)
        hit = table.get(key)
        if hit is None:
            hit = table[key] = quartic_symbol(r, p)
        return hit

    return sym


def _symbol_fn(d_t: GaussInt):
    if d_t.is_unit():
        return lambda c: ONE
    fns = [
        (_prime_symbol_fn(p), e) for p, e in factor(d_t).factors
    ]

    def sym(c: GaussInt) -> GaussInt:
        out = ONE
        for f, e in fns:
            out = out * f(c).pow(e)
        return out

    return sym


def _i_symbol(d_t: GaussInt) -> GaussInt:
    return ONE if d_t.is_unit() else quartic_symbol(GaussInt(0, 1), d_t)


def _chi(d_t: GaussInt) -> GaussInt:
    return ONE if d_t.is_unit() else quartic_symbol(GaussInt(1, 1), d_t)


def _check_conductor(d_t: GaussInt, delta: GaussInt) -> None:
    if not is_primary(d_t) or not is_primary(delta):
        raise NotPrimary("twist and modulus must be primary")
    if delta.is_unit():
        raise ConductorMismatch("modulus must be a non-unit")
    if not d_t.is_unit():
        for p, _ in factor(d_t).factors:
            if not p.divides(delta):
                raise ConductorMismatch(f"prime {p} of {d_t} does not divide {delta}")


def finite_sum_theorem(d_t: GaussInt, delta: GaussInt, ctx: PrecisionCtx) -> mp.mpc:
    """(eps_T * Delta / Omega) * L_{2Delta}(psi_-D_T-bar, 1) as a finite sum.

    Sums over the full residue system C = {+-v, +-iv}; this is the
    authoritative evaluator, with the orbit-collapsed forms in
    finite_sum_corollary validated against it.
    """
    _check_conductor(d_t, delta)
    sym = _symbol_fn(d_t)
    isym = _i_symbol(d_t)
    c_all = residue_system(delta).full_system()
    with mp.workprec(ctx.bits + 16):
        terms = []
        if isym in (ONE, GaussInt(-1, 0)):
            char_sum = ZERO
            for c in c_all:
                char_sum = char_sum + sym(c)
            terms.append(mp.sqrt(2) / 4 * _to_mpc(char_sum))
            inv_sqrt2 = 1 / mp.sqrt(2)
            for c in c_all:
                s = sym(c)
                if not s:
                    continue
                p, _ = wp_pair(c, delta, ctx)
                terms.append(_to_mpc(s) * inv_sqrt2 * (p + 1) / (p * p - 2 * p - 1))
        elif isym == GaussInt(0, -1):
            for c in c_all:
                s = sym(c)
                if not s:
                    continue
                p, pp = wp_pair(c, delta, ctx)
                terms.append(_to_mpc(s) * pp * (p - 1) / (p * p - 2 * p - 1) / 4)
        else:
            chi = _to_mpc(_chi(d_t))
            a_coef = (1 - 1j) * chi / (1 - (1 - 1j) * chi)
            for c in c_all:
                s = sym(c)
                if not s:
                    continue
                p, pp = wp_pair(c, delta, ctx)
                terms.append(
                    _to_mpc(s)
                    * (a_coef * pp / p + 2 * pp * (p - 1) / (p * p - 2 * p - 1))
                    / 8
                )
        return +tree_sum(terms)


def finite_sum_corollary(
    d_t: GaussInt, delta: GaussInt, ctx: PrecisionCtx, i_case: str = "derived"
) -> mp.mpc:
    """The same value as finite_sum_theorem, summed over V only.

    The printed orbit formula for the (i/D_T)_4 = i case does not agree
    with a direct orbit collapse of the full-system sum; the collapse
    ("derived") is the default, the printed form is kept behind
    i_case="printed" for comparison.
    """
    _check_conductor(d_t, delta)
    sym = _symbol_fn(d_t)
    isym = _i_symbol(d_t)
    v_reps = residue_system(delta).v
    with mp.workprec(ctx.bits + 16):
        terms = []
        if isym in (ONE, GaussInt(-1, 0)):
            char_sum = ZERO
            for v in v_reps:
                for u in UNITS:
                    char_sum = char_sum + sym(u * v)
            terms.append(mp.sqrt(2) / 4 * _to_mpc(char_sum))
            for v in v_reps:
                s = sym(v)
                if not s:
                    continue
                p, _ = wp_pair(v, delta, ctx)
                den = (p * p - 2 * p - 1) * (p * p + 2 * p - 1)
                if isym == ONE:
                    w = 2 * mp.sqrt(2) * (3 * p * p - 1) / den
                else:
                    w = 2 * mp.sqrt(2) * p * (p * p + 1) / den
                terms.append(_to_mpc(s) * w)
        elif isym == GaussInt(0, -1):
            for v in v_reps:
                s = sym(v)
                if not s:
                    continue
                p, pp = wp_pair(v, delta, ctx)
                den = (p * p - 2 * p - 1) * (p * p + 2 * p - 1)
                terms.append(_to_mpc(s) * pp * (p * p + 1) / den)
        else:
            chi = _to_mpc(_chi(d_t))
            a_coef = (1 - 1j) * chi / (1 - (1 - 1j) * chi)
            for v in v_reps:
                s = sym(v)
                if not s:
                    continue
                p, pp = wp_pair(v, delta, ctx)
                p2 = p * p
                den = (p2 - 2 * p - 1) * (p2 + 2 * p - 1)
                if i_case == "derived":
                    num = (a_coef / 2) * den + p2 * p2 - 3 * p2
                elif i_case == "printed":
                    num = chi * den + p2 * p + p
                else:
                    raise ValueError(f"unknown i_case {i_case!r}")
                terms.append(_to_mpc(s) * (pp / p) * num / den)
        return +tree_sum(terms)


@dataclass(frozen=True)
class AlgebraicLValue:
    """A computed value matched to the exact form g / (rho * delta * 2^m * w).

    rho is a unit branch times the principal fourth root of -D, delta is
    sqrt(2) or 1, and w is an odd cofactor (1 or conj-divisors of D) with
    2-adic valuation 0.  v2 = v2(g) - m - (1/2 if sqrt2_flag).
    """

    approx: mp.mpc
    g: GaussInt | None
    m: int
    sqrt2_flag: bool
    branch: GaussInt
    odd_mult: GaussInt
    v2: Val2
    residual: float
    status: str  # "recognized" | "zero"

    @property
    def is_zero(self) -> bool:
        return self.status == "zero"


def _principal_fourth_root(d: GaussInt) -> mp.mpc:
    """Fourth root of -d with argument in (-pi/4, pi/4]."""
    rho = (-_to_mpc(d)) ** (mp.mpf(1) / 4)
    eps = mp.mpf(2) ** (-mp.mp.prec + 8)
    for _ in range(4):
        if -mp.pi / 4 < mp.arg(rho) <= mp.pi / 4 + eps:
            return rho
        rho *= 1j
    raise AssertionError("no principal branch found")


def _odd_multipliers(d: GaussInt) -> list[GaussInt]:
    """Odd denominators to clear, ordered from trivial upward."""
    if d.is_unit():
        return [ONE]
    rad = factor(d).radical()
    out = [ONE, d.conj()]
    if rad != d:
        out.insert(1, rad.conj())
        out.append((d * rad).conj())
    return out


def recognize(x: mp.mpc, d: GaussInt, ctx: PrecisionCtx) -> AlgebraicLValue:
    """Match x to g / (branch * rho * 2^m * sqrt2^s * w), w odd.

    x is the finite-sum value for twist D; rho is the principal fourth
    root of -D.  Raises Unrecognized when no candidate survives the
    residual tolerance 2^(-bits/4).
    """
    bits = ctx.bits
    with mp.workprec(bits + 16):
        if abs(x) < mp.mpf(2) ** (-(bits // 2)):
            return AlgebraicLValue(
                approx=x,
                g=None,
                m=0,
                sqrt2_flag=False,
                branch=ONE,
                odd_mult=ONE,
                v2=Val2.infinite(bits),
                residual=float(abs(x)),
                status="zero",
            )
        rho = _principal_fourth_root(d)
        tol = mp.mpf(2) ** (-(bits // 4))
        m_max = 8 + ceil(log2(max(2, d.norm())))
        sqrt2 = mp.sqrt(2)
        for w in _odd_multipliers(d):
            base = x * rho * _to_mpc(w)
            for sqrt2_flag in (False, True):
                y0 = base * sqrt2 if sqrt2_flag else base
                for m in range(m_max + 1):
                    y = y0 * mp.mpf(2) ** m
                    gr, gi = mp.nint(y.real), mp.nint(y.imag)
                    resid = abs(y - mp.mpc(gr, gi))
                    if resid >= tol:
                        continue
                    g = GaussInt(int(gr), int(gi))
                    if not g:
                        continue
                    v2 = v2_gauss(g) - m - (Fraction(1, 2) if sqrt2_flag else 0)
                    _assert_branch_invariance(y, g, v2, m, sqrt2_flag, tol)
                    return AlgebraicLValue(
                        approx=x,
                        g=g,
                        m=m,
                        sqrt2_flag=sqrt2_flag,
                        branch=ONE,
                        odd_mult=w,
                        v2=Val2.finite(v2),
                        residual=float(resid),
                        status="recognized",
                    )
    raise Unrecognized(
        f"value for twist {d} not matched at {bits} bits; raise the precision"
    )


def _assert_branch_invariance(y, g, v2, m, sqrt2_flag, tol):
    """All four unit branches must give the same valuation."""
    for u in UNITS:
        yu = y * _to_mpc(u)
        gu = u * g
        if abs(yu - _to_mpc(gu)) >= tol:
            raise Unrecognized("branch instability in recognition")
        vu = v2_gauss(gu) - m - (Fraction(1, 2) if sqrt2_flag else 0)
        assert vu == v2


def l2_value(
    d: GaussInt, ctx: PrecisionCtx | None = None, bits: int | None = None
) -> AlgebraicLValue:
    """v2-carrying value of L_2(psi_-D-bar, 1)/Omega for a primary twist.

    Delta is the product of the class radicals, so every omitted Euler
    factor beyond 1+i sits at a bad prime and the computed quantity
    shares its valuation with L_2/Omega (v2(eps*Delta) = 0).
    """
    if d.is_unit():
        # L(psi_-1-bar, 1)/Omega = 1/(2*sqrt 2); E_-1 is bad only at 1+i.
        ctx = ctx or PrecisionCtx(bits=bits or 128)
        with mp.workprec(ctx.bits + 16):
            x = 1 / (2 * mp.sqrt(2))
        return recognize(x, d, ctx)
    dec = decompose(d)
    if ctx is None:
        ctx = default_ctx(dec.delta, bits)
    x = finite_sum_theorem(d, dec.delta, ctx)
    return recognize(x, d, ctx)


def bound(dec: TwistDecomposition) -> Fraction:
    """Proved lower bound for v2(L_2/Omega): (r-2)/2, or (2r-3)/2 on squares."""
    if dec.is_square:
        return Fraction(2 * dec.r - 3, 2)
    return Fraction(dec.r - 2, 2)


@dataclass(frozen=True)
class BoundReport:
    d: GaussInt
    decomposition: TwistDecomposition
    lvalue: AlgebraicLValue
    v2: Val2
    lower: Fraction
    ok: bool


def check_bound(
    d: GaussInt, ctx: PrecisionCtx | None = None, bits: int | None = None
) -> BoundReport:
    dec = decompose(d)
    lv = l2_value(d, ctx=ctx, bits=bits)
    lower = bound(dec)
    return BoundReport(
        d=d,
        decomposition=dec,
        lvalue=lv,
        v2=lv.v2,
        lower=lower,
        ok=lv.v2.meets(lower),
    )


# ---------------------------------------------------------------------------
# Divisor sums (Zhao's method at desk scale)
# ---------------------------------------------------------------------------


def _divisor_values(
    twists: list[GaussInt], delta: GaussInt, ctx: PrecisionCtx
) -> list[mp.mpc]:
    """finite_sum_theorem for every twist in one pass over C.

    All twists share Delta, so the Weierstrass data and the per-prime
    symbols are computed once per residue class and combined per twist.
    Sequential accumulation in enumeration order keeps this deterministic.
    """
    prime_pool: list[GaussInt] = []
    twist_exps = []
    for d_t in twists:
        exps = {}
        if not d_t.is_unit():
            for p, e in factor(d_t).factors:
                if p not in prime_pool:
                    prime_pool.append(p)
                exps[prime_pool.index(p)] = e
        twist_exps.append(exps)
    pool_syms = [_prime_symbol_fn(p) for p in prime_pool]
    c_all = residue_system(delta).full_system()
    with mp.workprec(ctx.bits + 16):
        sqrt2 = mp.sqrt(2)
        inv_sqrt2 = 1 / sqrt2
        minus_i = GaussInt(0, -1)
        plan = []
        for d_t in twists:
            isym = _i_symbol(d_t)
            if isym in (ONE, GaussInt(-1, 0)):
                plan.append(("pm1", None))
            elif isym == minus_i:
                plan.append(("mi", None))
            else:
                chi = _to_mpc(_chi(d_t))
                plan.append(("i", (1 - 1j) * chi / (1 - (1 - 1j) * chi)))
        # Accumulate the shared per-c expression into one bucket per unit
        # value of the twist's symbol; the unit multipliers are applied
        # once at the end, so the inner loop is adds only.
        unit_idx = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}
        unit_mpc = [mp.mpc(1), mp.mpc(0, 1), mp.mpc(-1), mp.mpc(0, -1)]
        zero4 = lambda: [mp.mpc(0)] * 4
        acc = [(zero4(), zero4()) for _ in twists]  # (main, aux for i-case)
        char_sums = [ZERO] * len(twists)
        for c in c_all:
            syms = [f(c) for f in pool_syms]
            shared = None
            for k, (kind, _) in enumerate(plan):
                s = ONE
                for idx, e in twist_exps[k].items():
                    s = s * syms[idx].pow(e)
                if kind == "pm1":
                    char_sums[k] = char_sums[k] + s
                if not s:
                    continue
                if shared is None:
                    p_c, pp_c = wp_pair(c, delta, ctx)
                    inv_den = 1 / (p_c * p_c - 2 * p_c - 1)
                    e_pm1 = inv_sqrt2 * (p_c + 1) * inv_den
                    e_mi = pp_c * (p_c - 1) * inv_den
                    e_i_a = pp_c / p_c
                    shared = True
                j = unit_idx[(s.re, s.im)]
                main, aux = acc[k]
                if kind == "pm1":
                    main[j] += e_pm1
                elif kind == "mi":
                    main[j] += e_mi
                else:
                    main[j] += e_i_a
                    aux[j] += e_mi
        out = []
        for k, (kind, a_coef) in enumerate(plan):
            main, aux = acc[k]
            s_main = sum((unit_mpc[j] * main[j] for j in range(4)), mp.mpc(0))
            if kind == "pm1":
                total = s_main + sqrt2 / 4 * _to_mpc(char_sums[k])
            elif kind == "mi":
                total = s_main / 4
            else:
                s_aux = sum(
                    (unit_mpc[j] * aux[j] for j in range(4)), mp.mpc(0)
                )
                total = (a_coef * s_main + 2 * s_aux) / 8
            out.append(+total)
        return out


@dataclass(frozen=True)
class DivisorSumReport:
    d: GaussInt
    delta: GaussInt
    lower: Fraction
    min_conjugate_v2: Fraction | None  # None when the sum is numerically zero
    ok: bool
    n_terms: int


def _divisor_twists(dec: TwistDecomposition) -> list[GaussInt]:
    """All D_T = prod(T1) * prod(T2)^2 * prod(T3)^3 over subset triples."""
    out = []
    for t1 in _subsets(dec.s1):
        for t2 in _subsets(dec.s2):
            for t3 in _subsets(dec.s3):
                d_t = ONE
                for p in t1:
                    d_t = d_t * p
                for p in t2:
                    d_t = d_t * p * p
                for p in t3:
                    d_t = d_t * p * p * p
                out.append(d_t)
    return out


def _subsets(xs):
    for k in range(len(xs) + 1):
        yield from itertools.combinations(xs, k)


def _snap_eighth_root(ratio: mp.mpc) -> int:
    """Index t with ratio = zeta8^t, verified to working tolerance."""
    zeta8 = mp.exp(1j * mp.pi / 4)
    for t in range(8):
        if abs(ratio - zeta8**t) < mp.mpf(2) ** (-mp.mp.prec // 2):
            return t
    raise Unrecognized(f"ratio {ratio} is not an eighth root of unity")


def divisor_sum_check(
    dec: TwistDecomposition, ctx: PrecisionCtx | None = None
) -> DivisorSumReport:
    """Verify the divisor-sum valuation bound for the twist's shape.

    The divisor sum mixes values from the quartic extensions K((-D_T)^{1/4}),
    so it cannot be recognized in the single-rho model.  Instead each term
    is recognized exactly, the sum is rewritten over the generators
    {zeta8, sqrt2, rho_k = (-pi_k)^{1/4}}, and the valuations of all of its
    Galois conjugates are read off the 2-adic Newton polygon of the
    characteristic polynomial over Q(i).  The check passes when the minimal
    conjugate valuation meets the case bound (n + 2m + l - 1)/2.
    """
    delta = dec.delta
    if ctx is None:
        ctx = default_ctx(delta)
    n, m_cnt, l_cnt = len(dec.s1), len(dec.s2), len(dec.s3)
    lower = Fraction(n + 2 * m_cnt + l_cnt - 1, 2)
    primes = list(dec.primes)
    r = len(primes)
    twists = _divisor_twists(dec)

    # Recognize every divisor term exactly (fused single pass over C).
    values = _divisor_values(twists, delta, ctx)
    recs: list[tuple[GaussInt, AlgebraicLValue]] = [
        (d_t, recognize(val, d_t, ctx)) for d_t, val in zip(twists, values)
    ]

    # term_T = g / (zeta8^t * prod rho_k^{e_k} * sqrt2^s * 2^m * w);
    # express each rho(D_T) as zeta8^t * prod rho_k^{e_k}.
    terms = []
    max_m = 0
    with mp.workprec(2 * ctx.bits):
        rho_k = [_principal_fourth_root(p) for p in primes]
        for d_t, rec in recs:
            if rec.is_zero:
                continue
            exps = [0] * r
            if not d_t.is_unit():
                for p, e in factor(d_t).factors:
                    exps[primes.index(p)] = e
            monomial = mp.mpc(1)
            for rk, e in zip(rho_k, exps):
                monomial *= rk**e
            t = _snap_eighth_root(_principal_fourth_root(d_t) / monomial)
            s = 1 if rec.sqrt2_flag else 0
            terms.append((rec.g, rec.odd_mult, t, tuple(exps), s, rec.m))
            max_m = max(max_m, rec.m)
    if not terms:
        return DivisorSumReport(
            d=dec.d,
            delta=delta,
            lower=lower,
            min_conjugate_v2=None,
            ok=True,
            n_terms=len(twists),
        )

    # Clear the common denominator so every conjugate is an algebraic
    # integer: multiply by 2^max_m * sqrt2 * prod rho_k^3 * prod conj(pi)^3.
    # The conjugates are exact algebraic reconstructions from recognized
    # data, so they can be re-evaluated at whatever precision the product
    # of deg linear factors requires.
    odd_clear = ONE
    for p in primes:
        odd_clear = odd_clear * p.conj().pow(3)
    deg = 2 * 4**r
    size = sum(
        log2(1 + abs(g.re) + abs(g.im)) + m + log2(2 + w.norm())
        for g, w, t, exps, s, m in terms
    ) + max_m + 4 * sum(log2(p.norm()) for p in primes) + 8
    prec = deg * (ceil(size) + 2) + ctx.bits + 64
    with mp.workprec(prec):
        zeta8 = mp.exp(1j * mp.pi / 4)
        sqrt2 = mp.sqrt(2)
        rho_k = [_principal_fourth_root(p) for p in primes]
        # Small power tables: mpc ** int at this precision would go through
        # log/exp and dominates the whole check.
        def _pow_table(base, top):
            tab = [mp.mpc(1)]
            for _ in range(top):
                tab.append(tab[-1] * base)
            return tab

        two_pows = _pow_table(mp.mpf(2), max(max_m, max(t[5] for t in terms)))
        conj_values = []
        for signs in itertools.product(range(2), *[range(4)] * r):
            sg, *js = signs
            sigma_sqrt2 = sqrt2 * (-1) ** sg
            zpows = _pow_table(zeta8 * (-1) ** sg, 7)
            rpows = [
                _pow_table(rho_k[k] * 1j ** js[k], 3) for k in range(r)
            ]
            base_clear = two_pows[max_m] * sigma_sqrt2 * _to_mpc(odd_clear)
            for k in range(r):
                base_clear *= rpows[k][3]
            total = mp.mpc(0)
            for g, w, t, exps, s, m in terms:
                denom = zpows[t]
                for k in range(r):
                    denom *= rpows[k][exps[k]]
                if s:
                    denom *= sigma_sqrt2
                denom *= two_pows[m] * _to_mpc(w)
                total += _to_mpc(g) * base_clear / denom
            conj_values.append(total)
        assert len(conj_values) == deg

        # Characteristic polynomial over Q(i); coefficients must round to
        # Gaussian integers, which revalidates every recognition above.
        coeffs = [mp.mpc(1)]
        for root in conj_values:
            nxt = [mp.mpc(0)] * (len(coeffs) + 1)
            for idx, cf in enumerate(coeffs):
                nxt[idx] += cf
                nxt[idx + 1] -= cf * root
            coeffs = nxt
        gauss_coeffs: list[GaussInt] = []
        for cf in coeffs:
            gr, gi = mp.nint(cf.real), mp.nint(cf.imag)
            if abs(cf - mp.mpc(gr, gi)) > mp.mpf("0.25"):
                raise Unrecognized(
                    f"characteristic polynomial coefficient {cf} is not integral"
                )
            gauss_coeffs.append(GaussInt(int(gr), int(gi)))

    # 2-adic Newton polygon: the minimal slope is the smallest valuation
    # among the conjugates of the cleared sum.  The convolution above
    # produced descending powers, so reverse to index by power of x.
    gauss_coeffs.reverse()
    pts = [
        (idx, v2_gauss(cf))
        for idx, cf in enumerate(gauss_coeffs)
        if cf
    ]
    top = pts[-1][0]
    min_slope = min((v - pts[-1][1]) / (top - idx) for idx, v in pts[:-1])
    # Undo the clearing factor: v2(2^max_m) = max_m, v2(sqrt2) = 1/2.
    min_v2 = min_slope - max_m - Fraction(1, 2)
    return DivisorSumReport(
        d=dec.d,
        delta=delta,
        lower=lower,
        min_conjugate_v2=min_v2,
        ok=min_v2 >= lower,
        n_terms=len(twists),
    )

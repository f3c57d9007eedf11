"""Exact arithmetic in Z[i].

Everything here is integer arithmetic on Gaussian integers: norms, units,
primary normalization, factorization into primary primes, CRT lifting,
residue systems modulo an odd element, and the quartic/quadratic residue
symbols computed by the Euler criterion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as int_gcd

from .errors import EvenInput, EvenModulus

__all__ = [
    "GaussInt",
    "GaussRat",
    "PrimaryFactorization",
    "ResidueSystem",
    "ZERO",
    "ONE",
    "I",
    "UNITS",
    "TWO_PLUS_2I",
    "is_primary",
    "primary_associate",
    "gcd",
    "factor",
    "quartic_symbol",
    "quadratic_symbol",
    "residue_system",
    "crt_lift",
    "v2_gauss",
]


_TERM = re.compile(r"([+-]?)(\d*)(i?)")


@dataclass(frozen=True)
class GaussInt:
    """An element a+bi of Z[i] with arbitrary-size integer parts."""

    re: int
    im: int

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def scale(self, k: int) -> "GaussInt":
        return GaussInt(self.re * k, self.im * k)

    def divround(self, other: "GaussInt") -> "GaussInt":
        """Nearest Gaussian integer to self/other."""
        n = other.norm()
        num = self * other.conj()

        def nearest(x: int) -> int:
            q, r = divmod(x, n)
            return q + 1 if 2 * r >= n else q

        return GaussInt(nearest(num.re), nearest(num.im))

    def __mod__(self, other: "GaussInt") -> "GaussInt":
        return self - self.divround(other) * other

    def divexact(self, other: "GaussInt") -> "GaussInt":
        """self/other, which must be an exact division."""
        n = other.norm()
        num = self * other.conj()
        if num.re % n or num.im % n:
            raise ValueError(f"{other} does not divide {self}")
        return GaussInt(num.re // n, num.im // n)

    def divides(self, other: "GaussInt") -> bool:
        n = self.norm()
        num = other * self.conj()
        return num.re % n == 0 and num.im % n == 0

    def pow(self, e: int) -> "GaussInt":
        r = ONE
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_odd(self) -> bool:
        """Coprime to 1+i, i.e. norm odd."""
        return self.norm() % 2 == 1

    # -- text form --------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "GaussInt":
        """Parse "a+bi" or "bi+a" style text, e.g. "-9+18i", "2i-1", "-3".

        Unicode minus signs are accepted; whitespace is ignored.
        """
        s = text.replace("−", "-").replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian integer literal")
        re_part = 0
        im_part = 0
        seen_re = seen_im = False
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse Gaussian integer {text!r}")
            sign, digits, imag = m.groups()
            if not digits and not imag:
                raise ValueError(f"cannot parse Gaussian integer {text!r}")
            value = int(digits) if digits else 1
            if sign == "-":
                value = -value
            if imag:
                if seen_im:
                    raise ValueError(f"duplicate imaginary term in {text!r}")
                im_part = value
                seen_im = True
            else:
                if seen_re:
                    raise ValueError(f"duplicate real term in {text!r}")
                re_part = value
                seen_re = True
            pos = m.end()
        return cls(re_part, im_part)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        i_abs = abs(self.im)
        i_txt = "i" if i_abs == 1 else f"{i_abs}i"
        sign = "+" if self.im > 0 else "-"
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{i_txt}"
        return f"{self.re}{sign}{i_txt}"

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
UNITS = (ONE, I, GaussInt(-1, 0), GaussInt(0, -1))
TWO_PLUS_2I = GaussInt(2, 2)
ONE_PLUS_I = GaussInt(1, 1)
FOUR = GaussInt(4, 0)


@dataclass(frozen=True)
class GaussRat:
    """An element of Q(i); components are exact rationals."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, z: GaussInt) -> "GaussRat":
        return cls(Fraction(z.re), Fraction(z.im))

    def __add__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __truediv__(self, other: "GaussRat") -> "GaussRat":
        n = other.re * other.re + other.im * other.im
        num = self * GaussRat(other.re, -other.im)
        return GaussRat(num.re / n, num.im / n)

    def scale(self, k: Fraction) -> "GaussRat":
        return GaussRat(self.re * k, self.im * k)

    def pow(self, e: int) -> "GaussRat":
        r = GaussRat(Fraction(1), Fraction(0))
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def v_one_plus_i(self) -> Fraction:
        """(1+i)-adic valuation; norm(1+i) = 2 so this is v2 of the norm."""
        if self.re == 0 and self.im == 0:
            raise ValueError("valuation of zero")
        n = self.re * self.re + self.im * self.im
        num, den = n.numerator, n.denominator
        v = 0
        while num % 2 == 0:
            num //= 2
            v += 1
        while den % 2 == 0:
            den //= 2
            v -= 1
        return Fraction(v)


def is_primary(z: GaussInt) -> bool:
    """True iff z is congruent to 1 mod 2+2i."""
    d = (z - ONE) * GaussInt(2, -2)
    return d.re % 8 == 0 and d.im % 8 == 0


def primary_associate(z: GaussInt) -> tuple[GaussInt, GaussInt]:
    """Return (u, p) with u a unit, u*z = p, and p primary.

    Exactly one of the four associates of an odd z qualifies.
    """
    if not z or not z.is_odd():
        raise EvenInput(f"{z} is divisible by 1+i")
    for u in UNITS:
        p = u * z
        if is_primary(p):
            return u, p
    raise AssertionError("unreachable: odd element has a primary associate")


def gcd(a: GaussInt, b: GaussInt) -> GaussInt:
    """A generator of the ideal (a, b), normalized primary when odd."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    if a.is_odd():
        return primary_associate(a)[1]
    return a


@dataclass(frozen=True)
class PrimaryFactorization:
    """unit * prod(prime^exp) * (1+i)^ramified = the factored element."""

    unit: GaussInt
    factors: tuple[tuple[GaussInt, int], ...]
    ramified: int = 0

    def value(self) -> GaussInt:
        z = self.unit
        for p, e in self.factors:
            z = z * p.pow(e)
        return z * ONE_PLUS_I.pow(self.ramified)

    def radical(self) -> GaussInt:
        z = ONE
        for p, _ in self.factors:
            z = z * p
        return z


def _factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def _sqrt_minus_one(p: int) -> int:
    """A solution of x^2 = -1 mod p for a prime p = 1 mod 4."""
    for a in range(2, p):
        x = pow(a, (p - 1) // 4, p)
        if (x * x) % p == p - 1:
            return x
    raise AssertionError(f"no square root of -1 mod {p}")


def factor(z: GaussInt) -> PrimaryFactorization:
    """Factor z over Z[i] into primary primes.

    The ramified prime 1+i is not primary; its multiplicity is reported
    separately in the `ramified` field.
    """
    if not z:
        raise ValueError("cannot factor 0")
    ram = 0
    while not z.is_odd():
        z = z.divexact(ONE_PLUS_I)
        ram += 1
    facs: list[tuple[GaussInt, int]] = []
    for p in sorted(_factor_int(z.norm())):
        if p % 4 == 3:
            pi = primary_associate(GaussInt(p, 0))[1]
            cands = [pi]
        else:
            x = _sqrt_minus_one(p)
            pi0 = gcd(GaussInt(p, 0), GaussInt(x, 1))
            cands = [primary_associate(pi0)[1], primary_associate(pi0.conj())[1]]
        for pi in cands:
            e = 0
            while pi.divides(z):
                z = z.divexact(pi)
                e += 1
            if e:
                facs.append((pi, e))
    assert z.is_unit()
    facs.sort(key=lambda pe: (pe[0].norm(), pe[0].re, pe[0].im))
    return PrimaryFactorization(unit=z, factors=tuple(facs), ramified=ram)


def _powmod(a: GaussInt, e: int, m: GaussInt) -> GaussInt:
    r = ONE
    a = a % m
    while e:
        if e & 1:
            r = (r * a) % m
        a = (a * a) % m
        e >>= 1
    return r


def _prime_symbol(a: GaussInt, pi: GaussInt) -> GaussInt:
    """(a/pi)_4 for a primary prime pi, by the Euler criterion."""
    if not (a % pi):
        return ZERO
    t = _powmod(a, (pi.norm() - 1) // 4, pi)
    for u in UNITS:
        if not ((t - u) % pi):
            return u
    raise AssertionError(f"Euler criterion failed at {pi}")


def quartic_symbol(a: GaussInt, b: GaussInt) -> GaussInt:
    """The quartic residue symbol (a/b)_4 in {0, 1, i, -1, -i}.

    b must be odd; it is factored and the symbol is extended
    multiplicatively over its primary prime factors.
    """
    if not b.is_odd():
        raise EvenInput(f"modulus {b} is divisible by 1+i")
    if b.is_unit():
        return ONE
    res = ONE
    for pi, e in factor(b).factors:
        s = _prime_symbol(a, pi)
        if not s:
            return ZERO
        res = res * s.pow(e % 4)
    return res


def quadratic_symbol(a: GaussInt, b: GaussInt) -> GaussInt:
    """(a/b)_2 in {0, 1, -1}: the square of the quartic symbol."""
    s = quartic_symbol(a, b)
    return s * s


@dataclass(frozen=True)
class ResidueSystem:
    """Primary orbit representatives of the unit group mod an odd Delta.

    The full system C of representatives of (O_K/Delta)^x is the set
    {u*v : u unit, v in V}; cardinality card_c = 4*len(v).
    """

    modulus: GaussInt
    v: tuple[GaussInt, ...]
    card_c: int

    def full_system(self) -> list[GaussInt]:
        """C, ordered orbit-by-orbit with the unit order 1, i, -1, -i."""
        return [u * rep for rep in self.v for u in UNITS]


def _modinv(a: GaussInt, m: GaussInt) -> GaussInt:
    """Inverse of a mod m (a coprime to m), by the extended Euclid loop."""
    r0, r1 = a % m, m
    s0, s1 = ONE, ZERO
    while r1:
        q = r0.divround(r1)
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    # r0 is a unit times gcd; divide it out
    if not r0.is_unit():
        raise ValueError(f"{a} not invertible mod {m}")
    return (s0 * r0.conj()) % m


def crt_lift(r: GaussInt, delta: GaussInt) -> GaussInt:
    """The smallest primary c with c = r mod delta.

    Smallest means minimal (norm, re, im) in the coset modulo
    (2+2i)*delta.
    """
    if not delta.is_odd():
        raise EvenModulus(f"modulus {delta} is divisible by 1+i")
    inv = _modinv(TWO_PLUS_2I, delta)
    t = ((r - ONE) * inv) % delta
    c = ONE + TWO_PLUS_2I * t
    m = TWO_PLUS_2I * delta
    c0 = c % m
    best = None
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            cand = c0 + m * GaussInt(dx, dy)
            if not is_primary(cand):
                continue
            key = (cand.norm(), cand.re, cand.im)
            if best is None or key < best[0]:
                best = (key, cand)
    assert best is not None
    c = best[1]
    assert not ((c - r) % delta)
    return c


def _residue_rect(delta: GaussInt) -> tuple[int, int]:
    """Side lengths (e, g) of a fundamental rectangle for Z[i]/(delta).

    The lattice delta*Z[i] meets the imaginary axis direction in step
    g = gcd(re, im) and the real axis in step e = norm/g, so
    {x+yi : 0 <= x < e, 0 <= y < g} is a complete residue system.
    """
    g = int_gcd(abs(delta.re), abs(delta.im))
    return delta.norm() // g, g


def residue_system(delta: GaussInt) -> ResidueSystem:
    """Build V: one primary lift per {+-c, +-ic} orbit of (O_K/delta)^x."""
    if not delta.is_odd():
        raise EvenModulus(f"modulus {delta} is divisible by 1+i")
    if delta.is_unit():
        raise ValueError("modulus must be a non-unit")
    e, g = _residue_rect(delta)
    seen: set[tuple[tuple[int, int], ...]] = set()
    v: list[GaussInt] = []
    for y in range(g):
        for x in range(e):
            r = GaussInt(x, y)
            if not gcd(r, delta).is_unit():
                continue
            orbit = tuple(
                sorted((c.re, c.im) for c in ((u * r) % delta for u in UNITS))
            )
            if orbit in seen:
                continue
            seen.add(orbit)
            v.append(crt_lift(r, delta))
    v.sort(key=lambda c: (c.norm(), c.re, c.im))
    return ResidueSystem(modulus=delta, v=tuple(v), card_c=4 * len(v))


def v2_gauss(g: GaussInt) -> Fraction:
    """2-adic valuation of a nonzero Gaussian integer, in (1/2)Z.

    Normalized so v2(2) = 1 and v2(1+i) = 1/2; equals v2(norm)/2.
    """
    if not g:
        raise ValueError("valuation of zero")
    n = g.norm()
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return Fraction(v, 2)

"""Exception types shared across the package."""


class QLError(Exception):
    """Base class for all errors raised by this package."""


class EvenInput(QLError):
    """An argument required to be coprime to 1+i is divisible by it."""


class EvenModulus(QLError):
    """A modulus required to be odd is divisible by 1+i."""


class NotPrimary(QLError):
    """An argument required to be congruent to 1 mod 2+2i is not."""


class NotQuarticFree(QLError):
    """A twist parameter contains a fourth power of a prime."""


class LatticePoint(QLError):
    """A Weierstrass function was requested at a lattice point."""


class PrecisionTooLow(QLError):
    """Cancellation exhausted the working precision."""


class ConductorMismatch(QLError):
    """The radical of the twist does not divide the chosen modulus."""


class DividesD(QLError):
    """An Euler factor was requested at a prime dividing the twist."""


class NotGoodAt2(QLError):
    """A good-reduction-only quantity was requested for a curve that is bad at 1+i."""


class Unrecognized(QLError):
    """A numerical value could not be matched to an exact algebraic form."""

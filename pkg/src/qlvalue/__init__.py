"""Central Hecke L-values of quartic twists y^2 = x^3 + Dx over Q(i).

Computes the algebraic part L_2(psi_-D-bar, 1)/Omega as a finite sum of
lemniscatic Weierstrass values, recognizes it exactly, and reads off its
2-adic valuation together with the proved lower bound and the local
reduction data of the twist.
"""

from .errors import (
    ConductorMismatch,
    DividesD,
    EvenInput,
    EvenModulus,
    LatticePoint,
    NotGoodAt2,
    NotPrimary,
    NotQuarticFree,
    PrecisionTooLow,
    QLError,
    Unrecognized,
)
from .gauss import (
    GaussInt,
    GaussRat,
    PrimaryFactorization,
    ResidueSystem,
    factor,
    gcd,
    is_primary,
    primary_associate,
    quadratic_symbol,
    quartic_symbol,
    residue_system,
    v2_gauss,
)
from .hecke import (
    EulerFactor,
    NormalizedTwist,
    TwistDecomposition,
    decompose,
    epsilon,
    euler_factor,
    normalize_twist,
    psi_eval,
    psi_via_lemma,
    sgn,
)
from .lemni import PrecisionCtx, omega, omega_integral, wp, wp_pair, wp_prime
from .localdata import (
    LocalData,
    MinimalModel2,
    conductor,
    good_reduction_at_2,
    local_data,
    minimal_model_at_2,
)
from .lvalue import (
    AlgebraicLValue,
    BoundReport,
    DivisorSumReport,
    Val2,
    bound,
    check_bound,
    default_ctx,
    divisor_sum_check,
    finite_sum_corollary,
    finite_sum_theorem,
    l2_value,
    recognize,
)

__version__ = "1.0.0"

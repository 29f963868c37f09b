"""Arithmetic in F_p and F_p(sqrt n), and a norm-based test for generators of F_{p^2}*."""

from .errors import (
    ContextMismatch,
    DividesModulus,
    FieldError,
    NotInGroup,
    NotNonresidue,
    NotOddPrime,
    ZeroElement,
    ZeroInverse,
)
from .factor import Factorization, euler_totient, factorize, multiplicative_order
from .modular import (
    FpElement,
    is_primitive_root,
    is_quadratic_nonresidue,
    legendre_symbol,
    mod_inverse,
    mod_pow,
    quadratic_residues,
    smallest_nonresidue,
)
from .quadext import FieldContext, Fp2Element, enumerate_units
from .theorem import (
    ClassificationResult,
    VerificationReport,
    benchmark_classification,
    brute_force_order,
    classify,
    enumerate_generators,
    find_generator,
    verify_theorem,
)

__version__ = "0.1.0"

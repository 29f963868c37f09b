"""Arithmetic and quadratic-residue theory in the prime field F_p.

Residues are always stored in canonical form ``0 <= value < p``; negative
inputs such as ``n = -1`` are reduced on ingestion.  Only odd primes are
accepted as moduli.

Primality of the modulus is decided by trial division up to ``isqrt(p)``,
which is fast for the desk-scale range this package targets
(``p < MAX_MODULUS``).  Larger moduli still work but get slow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import DividesModulus, NotOddPrime, ZeroElement, ZeroInverse
from .factor import Factorization, factorize

__all__ = [
    "MAX_MODULUS",
    "FpElement",
    "is_prime",
    "require_odd_prime",
    "mod_pow",
    "mod_inverse",
    "legendre_symbol",
    "quadratic_residues",
    "is_quadratic_nonresidue",
    "smallest_nonresidue",
    "is_primitive_root",
    "odd_primes",
]

MAX_MODULUS = 10**6


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    limit = isqrt(n)
    while d <= limit:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@lru_cache(maxsize=4096)
def require_odd_prime(p: int) -> int:
    """Return ``p`` unchanged, raising NotOddPrime unless it is an odd prime."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise NotOddPrime(f"modulus must be an integer, got {p!r}")
    if p == 2:
        raise NotOddPrime("p = 2 is not supported: p must be an odd prime")
    if not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    return p


def odd_primes(upto: int) -> list[int]:
    """All odd primes ``3 <= p <= upto``."""
    return [p for p in range(3, upto + 1, 2) if is_prime(p)]


@dataclass(frozen=True)
class FpElement:
    """A residue class modulo an odd prime."""

    value: int
    modulus: int

    def __post_init__(self):
        require_odd_prime(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int | None:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ValueError(f"moduli differ: {self.modulus} != {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def _new(self, value: int) -> FpElement:
        return FpElement(value, self.modulus)

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._new(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._new(self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._new(v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._new(self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * mod_inverse(self._new(v))

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, exp: int):
        if exp < 0:
            return mod_pow(mod_inverse(self), -exp)
        return mod_pow(self, exp)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FpElement({self.value} mod {self.modulus})"

    def __str__(self):
        return str(self.value)

    def inverse(self) -> FpElement:
        return mod_inverse(self)


def mod_pow(base: FpElement, exp: int) -> FpElement:
    """``base**exp`` by square-and-multiply; ``0**0 == 1``."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return FpElement(pow(base.value, exp, base.modulus), base.modulus)


def mod_inverse(a: FpElement) -> FpElement:
    if a.value == 0:
        raise ZeroInverse(f"0 has no inverse mod {a.modulus}")
    return FpElement(pow(a.value, -1, a.modulus), a.modulus)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) via Euler's criterion.

    Returns +1 if ``a`` is a nonzero square mod ``p`` and -1 otherwise.
    """
    require_odd_prime(p)
    a = int(a) % p
    if a == 0:
        raise DividesModulus(f"{p} divides the argument; the symbol is undefined")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def quadratic_residues(p: int) -> frozenset[FpElement]:
    """The set Q(p) of nonzero squares mod p, built by squaring every unit."""
    require_odd_prime(p)
    return frozenset(FpElement(x * x, p) for x in range(1, p))


def is_quadratic_nonresidue(n: int, p: int) -> bool:
    return legendre_symbol(n, p) == -1


def smallest_nonresidue(p: int) -> int:
    """Least integer ``n >= 2`` that is not a square mod ``p``."""
    require_odd_prime(p)
    n = 2
    while legendre_symbol(n, p) != -1:
        n += 1
    return n


def is_primitive_root(a: FpElement, factorization: Factorization | None = None) -> bool:
    """True iff ``a`` generates F_p*.

    ``factorization`` must be the factorization of ``p - 1``; it is computed
    when omitted.  The test checks ``a**((p-1)/q) != 1`` for every prime
    ``q | p - 1``.
    """
    p = a.modulus
    if a.value == 0:
        raise ZeroElement("0 is not an element of F_p*")
    if factorization is None:
        factorization = factorize(p - 1)
    elif factorization.target != p - 1:
        raise ValueError(f"expected a factorization of {p - 1}, got one of {factorization.target}")
    return all(pow(a.value, (p - 1) // q, p) != 1 for q in factorization.primes)

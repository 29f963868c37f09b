"""Integer factorization, Euler's totient and generic multiplicative order.

``factorize`` trial-divides by the primes below ``TRIAL_LIMIT`` and splits
whatever cofactor remains with Pollard's rho (Brent's cycle detection,
polynomial ``x**2 + c`` starting from ``c = 1``, fixed seed), so results and
timings are reproducible.  Cofactor primality is decided by Miller-Rabin
with the first thirteen prime bases, which is deterministic below
``MAX_FACTOR_TARGET`` (about 3.3e24); larger inputs are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Callable, Iterator, TypeVar

from .errors import NotInGroup

__all__ = [
    "TRIAL_LIMIT",
    "MAX_FACTOR_TARGET",
    "Factorization",
    "factorize",
    "euler_totient",
    "multiplicative_order",
    "power_from_multiply",
    "is_probable_prime",
]

T = TypeVar("T")

TRIAL_LIMIT = 1 << 12
MAX_FACTOR_TARGET = 3_317_044_064_679_887_385_961_981

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = _sieve(TRIAL_LIMIT)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; exact for ``n < MAX_FACTOR_TARGET``."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``target == prod(q**e for q, e in factors)``.

    ``factors`` is a tuple of ``(prime, exponent)`` pairs with strictly
    increasing primes.
    """

    target: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(q), int(e)) for q, e in self.factors))
        primes = [q for q, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be >= 1")
        if any(not is_probable_prime(q) for q in primes):
            raise ValueError("every factor must be prime")
        if self.value() != self.target:
            raise ValueError(f"factors multiply to {self.value()}, not {self.target}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def value(self) -> int:
        """Rebuild the integer from its prime powers."""
        return prod(q**e for q, e in self.factors)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{q}^{e}" if e > 1 else str(q) for q, e in self.factors)


def _brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    c = 1
    while True:
        y, r, q = 2, 1, 1
        m = 128
        g = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batched product hit zero; walk back one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(m: int) -> Factorization:
    """Complete prime factorization of ``1 <= m < MAX_FACTOR_TARGET``."""
    if m < 1:
        raise ValueError(f"can only factor positive integers, got {m}")
    if m >= MAX_FACTOR_TARGET:
        raise ValueError(f"{m} exceeds the supported range (< {MAX_FACTOR_TARGET})")
    found: dict[int, int] = {}
    rest = m
    for q in _SMALL_PRIMES:
        if q * q > rest:
            break
        if rest % q == 0:
            e = 0
            while rest % q == 0:
                rest //= q
                e += 1
            found[q] = e
    if rest > 1:
        _split(rest, found)
    return Factorization(m, tuple(sorted(found.items())))


def euler_totient(f: Factorization) -> int:
    return prod((q - 1) * q ** (e - 1) for q, e in f.factors)


def power_from_multiply(mul: Callable[[T, T], T], identity: T) -> Callable[[T, int], T]:
    """Build a square-and-multiply power function from a group product."""

    def power(x: T, k: int) -> T:
        result = identity
        while k:
            if k & 1:
                result = mul(result, x)
            x = mul(x, x)
            k >>= 1
        return result

    return power


def multiplicative_order(
    x: T,
    group_order: int,
    factorization: Factorization | None = None,
    *,
    identity: T = 1,
    power: Callable[[T, int], T] = pow,
) -> int:
    """Order of ``x`` inside a group of order ``group_order``.

    Starts from ``group_order`` and strips each prime factor ``q`` while
    ``x**(order/q)`` stays the identity.  ``power`` realises exponentiation
    in the group; use ``power_from_multiply`` when only a product is at hand.
    Raises NotInGroup if ``x**group_order`` is not the identity.
    """
    if factorization is None:
        factorization = factorize(group_order)
    elif factorization.target != group_order:
        raise ValueError(f"expected a factorization of {group_order}, got one of {factorization.target}")
    if power(x, group_order) != identity:
        raise NotInGroup(f"{x!r} raised to {group_order} is not the identity")
    order = group_order
    for q, e in factorization.factors:
        for _ in range(e):
            if power(x, order // q) != identity:
                break
            order //= q
    return order

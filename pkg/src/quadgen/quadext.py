"""The quadratic extension F_{p^2} = F_p(sqrt n).

Elements are dense pairs ``(a, b)`` standing for ``a + b*sqrt(n)`` in the
fixed basis ``{1, sqrt n}``.  Coordinates are plain ints kept in
``[0, p)``; every element carries the :class:`FieldContext` it lives in.

The norm ``N(a + b sqrt n) = a^2 - n b^2`` maps F_{p^2}* onto F_p*, and
``f(u) = u^2 / N(u) = u / conj(u)`` maps F_{p^2}* onto the norm-one
subgroup ``Ker N`` (order ``p + 1``) with kernel F_p*.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

from .errors import ContextMismatch, NotNonresidue, ZeroElement, ZeroInverse
from .factor import Factorization, factorize
from .modular import FpElement, legendre_symbol, require_odd_prime, smallest_nonresidue

__all__ = [
    "FieldContext",
    "Fp2Element",
    "multiply",
    "inverse",
    "power",
    "conjugate",
    "norm",
    "f_map",
    "in_kernel_of_norm",
    "enumerate_units",
]


@dataclass(frozen=True)
class FieldContext:
    """Parameters ``(p, n)`` of F_p(sqrt n) plus cached factorizations.

    ``n`` may be given as any integer (``-1`` included); it is reduced mod
    ``p`` and must be a quadratic nonresidue.  Two contexts compare equal
    when their ``(p, n)`` agree, so their elements interoperate.
    """

    p: int
    n: int
    fact_p_minus_1: Factorization = field(init=False, compare=False, repr=False)
    fact_p_plus_1: Factorization = field(init=False, compare=False, repr=False)
    fact_units: Factorization = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        p = require_odd_prime(self.p)
        n = int(self.n) % p
        if n == 0:
            raise NotNonresidue(f"n is divisible by p = {p}")
        if legendre_symbol(n, p) != -1:
            raise NotNonresidue(f"n = {n} is a quadratic residue mod {p}")
        object.__setattr__(self, "n", n)
        fm, fp = factorize(p - 1), factorize(p + 1)
        assert gcd(p - 1, p + 1) == 2
        object.__setattr__(self, "fact_p_minus_1", fm)
        object.__setattr__(self, "fact_p_plus_1", fp)
        object.__setattr__(self, "fact_units", factorize(p * p - 1))

    @classmethod
    def for_prime(cls, p: int) -> FieldContext:
        """Context using the smallest nonresidue ``n >= 2``."""
        return cls(p, smallest_nonresidue(p))

    @property
    def unit_count(self) -> int:
        return self.p * self.p - 1

    @property
    def kernel_order(self) -> int:
        return self.p + 1

    def __call__(self, a=0, b=0) -> Fp2Element:
        return Fp2Element(a, b, self)

    element = __call__

    @property
    def one(self) -> Fp2Element:
        return Fp2Element._raw(1, 0, self)

    @property
    def zero(self) -> Fp2Element:
        return Fp2Element._raw(0, 0, self)

    @property
    def sqrt_n(self) -> Fp2Element:
        return Fp2Element._raw(0, 1, self)

    def base(self, x: int | FpElement) -> FpElement:
        return FpElement(int(x), self.p)

    def __str__(self):
        return f"F_{self.p}(sqrt {self.n})"


class Fp2Element:
    """Immutable element ``a + b*sqrt(n)`` of F_p(sqrt n)."""

    __slots__ = ("a", "b", "ctx")

    def __init__(self, a: int | FpElement, b: int | FpElement, ctx: FieldContext):
        p = ctx.p
        for c in (a, b):
            if isinstance(c, FpElement) and c.modulus != p:
                raise ContextMismatch(f"coordinate {c!r} is not in F_{p}")
        object.__setattr__(self, "a", int(a) % p)
        object.__setattr__(self, "b", int(b) % p)
        object.__setattr__(self, "ctx", ctx)

    @classmethod
    def _raw(cls, a: int, b: int, ctx: FieldContext) -> Fp2Element:
        # caller guarantees 0 <= a, b < p
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "ctx", ctx)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Fp2Element is immutable")

    def __reduce__(self):
        return (Fp2Element, (self.a, self.b, self.ctx))

    def _other(self, other) -> Fp2Element | None:
        if isinstance(other, Fp2Element):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, FpElement):
            if other.modulus != self.ctx.p:
                raise ContextMismatch(f"{other!r} is not in F_{self.ctx.p}")
            return Fp2Element._raw(other.value, 0, self.ctx)
        if isinstance(other, int):
            return Fp2Element._raw(other % self.ctx.p, 0, self.ctx)
        return None

    @property
    def coords(self) -> tuple[int, int]:
        return self.a, self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_base(self) -> bool:
        """True when the element lies in the prime field (``b == 0``)."""
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = self._other(other)
        except ContextMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.ctx.p, self.ctx.n))

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return Fp2Element._raw((self.a + o.a) % p, (self.b + o.b) % p, self.ctx)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return Fp2Element._raw(-self.a % p, -self.b % p, self.ctx)

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p, n = self.ctx.p, self.ctx.n
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        return Fp2Element._raw((a1 * a2 + n * b1 * b2) % p, (a1 * b2 + a2 * b1) % p, self.ctx)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        if k == 0:
            return self.ctx.one
        if self.is_zero():
            return self
        p, n = self.ctx.p, self.ctx.n
        ra, rb = 1, 0
        xa, xb = self.a, self.b
        while True:
            if k & 1:
                ra, rb = (ra * xa + n * rb * xb) % p, (ra * xb + rb * xa) % p
            k >>= 1
            if not k:
                break
            xa, xb = (xa * xa + n * xb * xb) % p, 2 * xa * xb % p
        return Fp2Element._raw(ra, rb, self.ctx)

    def conjugate(self) -> Fp2Element:
        return Fp2Element._raw(self.a, -self.b % self.ctx.p, self.ctx)

    def norm(self) -> FpElement:
        p = self.ctx.p
        return FpElement(self.a * self.a - self.ctx.n * self.b * self.b, p)

    def inverse(self) -> Fp2Element:
        """``conj(u) / N(u)``."""
        if self.is_zero():
            raise ZeroInverse("0 has no inverse in F_{p^2}")
        p = self.ctx.p
        d = pow((self.a * self.a - self.ctx.n * self.b * self.b) % p, -1, p)
        return Fp2Element._raw(self.a * d % p, -self.b * d % p, self.ctx)

    def f_map(self) -> Fp2Element:
        """``u^2 / N(u)``, always an element of norm one."""
        if self.is_zero():
            raise ZeroElement("f is only defined on F_{p^2}*")
        p, n = self.ctx.p, self.ctx.n
        a, b = self.a, self.b
        d = pow((a * a - n * b * b) % p, -1, p)
        return Fp2Element._raw((a * a + n * b * b) * d % p, 2 * a * b * d % p, self.ctx)

    def in_kernel_of_norm(self) -> bool:
        if self.is_zero():
            raise ZeroElement("0 is not in F_{p^2}*")
        return (self.a * self.a - self.ctx.n * self.b * self.b) % self.ctx.p == 1

    def to_dict(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b}

    def __str__(self):
        return f"{self.a}+{self.b}√{self.ctx.n}"

    def __repr__(self):
        return f"Fp2Element({self.a}+{self.b}√{self.ctx.n} mod {self.ctx.p})"


def multiply(u: Fp2Element, v: Fp2Element) -> Fp2Element:
    if not isinstance(v, Fp2Element):
        raise TypeError("multiply expects two Fp2Element operands")
    return u * v


def inverse(u: Fp2Element) -> Fp2Element:
    return u.inverse()


def power(u: Fp2Element, k: int) -> Fp2Element:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    return u**k


def conjugate(u: Fp2Element) -> Fp2Element:
    return u.conjugate()


def norm(u: Fp2Element) -> FpElement:
    """``a^2 - n b^2``; the norm of 0 is 0."""
    return u.norm()


def f_map(u: Fp2Element) -> Fp2Element:
    return u.f_map()


def in_kernel_of_norm(u: Fp2Element) -> bool:
    return u.in_kernel_of_norm()


def enumerate_units(ctx: FieldContext) -> Iterator[Fp2Element]:
    """Every nonzero element once, in lexicographic ``(a, b)`` order."""
    p = ctx.p
    for a in range(p):
        for b in range(1 if a == 0 else 0, p):
            yield Fp2Element._raw(a, b, ctx)

"""Independent brute-force oracles shared by the test modules.

None of these touch quadgen: they work on bare ints by enumeration.
"""

from math import gcd

import pytest


def naive_primes(upto):
    return [q for q in range(2, upto + 1) if all(q % d for d in range(2, q))]


def naive_odd_primes(upto):
    return [q for q in naive_primes(upto) if q > 2]


def squares_mod(p):
    return {x * x % p for x in range(1, p)}


def naive_order_mod(a, p):
    k, x = 1, a % p
    while x != 1:
        x = x * a % p
        k += 1
    return k


def naive_totient(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def naive_factor(m):
    out, d = [], 2
    while m > 1:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    return out


def pair_mul(x, y, p, n):
    """(a1 + b1 r)(a2 + b2 r) with r^2 = n, straight from the definition."""
    return ((x[0] * y[0] + n * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)


def naive_pair_order(x, p, n):
    k, y = 1, x
    while y != (1, 0):
        y = pair_mul(y, x, p, n)
        k += 1
    return k


def all_pairs(p):
    return [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]


SMALL_PRIMES = naive_odd_primes(13)
EXHAUSTIVE_PRIMES = naive_odd_primes(31)


@pytest.fixture(params=SMALL_PRIMES)
def small_ctx(request):
    from quadgen import FieldContext

    return FieldContext.for_prime(request.param)

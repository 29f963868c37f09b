import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import naive_odd_primes, naive_order_mod, naive_totient, squares_mod
from quadgen import (
    DividesModulus,
    FpElement,
    NotOddPrime,
    ZeroElement,
    ZeroInverse,
    factorize,
    is_primitive_root,
    is_quadratic_nonresidue,
    legendre_symbol,
    mod_inverse,
    mod_pow,
    quadratic_residues,
    smallest_nonresidue,
)
from quadgen.modular import is_prime, odd_primes

PRIMES_101 = naive_odd_primes(101)


def F(v, p):
    return FpElement(v, p)


def test_canonical_representative():
    assert F(-1, 7).value == 6
    assert F(15, 7) == F(1, 7)
    assert F(3, 7) == 10
    assert F(3, 7) != F(3, 11)


def test_two_and_composites_rejected():
    with pytest.raises(NotOddPrime):
        F(1, 2)
    with pytest.raises(NotOddPrime):
        F(1, 9)
    with pytest.raises(NotOddPrime):
        legendre_symbol(1, 15)


def test_is_prime_matches_sieve():
    assert odd_primes(500) == naive_odd_primes(500)
    assert not is_prime(1) and is_prime(2) and is_prime(999983)


def test_mod_pow_examples():
    assert mod_pow(F(2, 7), 0) == 1
    assert mod_pow(F(0, 7), 0) == 1
    assert mod_pow(F(2, 7), 3) == 1
    for p in (3, 5, 7, 11, 13):
        for a in range(1, p):
            assert mod_pow(F(a, p), p - 1) == 1


def test_mod_inverse():
    assert mod_inverse(F(1, 13)) == 1
    assert mod_inverse(F(2, 3)) == 2
    for p in (3, 7, 101):
        assert mod_inverse(F(p - 1, p)) == p - 1
    with pytest.raises(ZeroInverse):
        mod_inverse(F(0, 5))
    with pytest.raises(ZeroDivisionError):
        F(3, 5) / F(0, 5)


@given(st.sampled_from(PRIMES_101), st.integers(1, 10**6))
def test_inverse_property(p, a):
    if a % p:
        assert F(a, p) * mod_inverse(F(a, p)) == 1


def test_legendre_examples():
    assert legendre_symbol(1, 7) == 1
    assert legendre_symbol(2, 3) == -1
    assert legendre_symbol(-1, 7) == -1
    with pytest.raises(DividesModulus):
        legendre_symbol(14, 7)


@pytest.mark.parametrize("p", PRIMES_101)
def test_legendre_agrees_with_square_set(p):
    sq = squares_mod(p)
    for a in range(1, p):
        assert (legendre_symbol(a, p) == 1) == (a in sq)
        assert (legendre_symbol(a - p, p) == 1) == (a in sq)


@given(st.sampled_from(PRIMES_101), st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_legendre_multiplicative(p, a, b):
    if a % p and b % p:
        assert legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p)


def test_quadratic_residue_sets():
    assert {x.value for x in quadratic_residues(3)} == {1}
    assert {x.value for x in quadratic_residues(7)} == {1, 2, 4}
    for p in PRIMES_101:
        assert len(quadratic_residues(p)) == (p - 1) // 2


def test_nonresidue_examples():
    assert is_quadratic_nonresidue(-1, 3)
    assert not is_quadratic_nonresidue(-1, 5)
    for p in PRIMES_101:
        assert not is_quadratic_nonresidue(1, p)
    with pytest.raises(DividesModulus):
        is_quadratic_nonresidue(0, 5)


def test_smallest_nonresidue():
    assert smallest_nonresidue(3) == 2
    assert smallest_nonresidue(5) == 2
    assert smallest_nonresidue(7) == 3
    for p in PRIMES_101:
        sq = squares_mod(p)
        expect = next(n for n in range(2, p) if n not in sq)
        assert smallest_nonresidue(p) == expect


def test_primitive_root_examples():
    for p in (3, 5, 7, 11):
        assert not is_primitive_root(F(1, p))
    assert is_primitive_root(F(2, 3))
    assert not is_primitive_root(F(2, 7))
    assert is_primitive_root(F(3, 7), factorize(6))
    with pytest.raises(ZeroElement):
        is_primitive_root(F(0, 7))
    with pytest.raises(ValueError):
        is_primitive_root(F(3, 7), factorize(12))


@pytest.mark.parametrize("p", PRIMES_101)
def test_primitive_roots_against_naive_order(p):
    f = factorize(p - 1)
    roots = [a for a in range(1, p) if is_primitive_root(F(a, p), f)]
    assert roots == [a for a in range(1, p) if naive_order_mod(a, p) == p - 1]
    assert len(roots) == naive_totient(p - 1)
    # a square is never a primitive root
    assert not set(roots) & squares_mod(p)

"""Acceptance suite: one test per exit criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` (or ``-rA``) to see the lines.
"""

import io
import json
import time
from contextlib import contextmanager

import pytest

from conftest import naive_odd_primes, naive_order_mod, naive_pair_order, naive_totient, squares_mod
from quadgen import (
    FieldContext,
    brute_force_order,
    enumerate_generators,
    enumerate_units,
    legendre_symbol,
    multiplicative_order,
    quadratic_residues,
    verify_theorem,
)
from quadgen.cli import main


def theorem_contexts(upto):
    out = []
    for p in naive_odd_primes(upto):
        ctx = FieldContext.for_prime(p)
        out.append(ctx)
        if p % 4 == 3 and ctx.n != p - 1:
            out.append(FieldContext(p, -1))
    return out


@contextmanager
def criterion(capsys, number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\n[acceptance {number:2d}] FAIL  {title}")
        raise
    with capsys.disabled():
        print(f"\n[acceptance {number:2d}] PASS  {title}  ({time.perf_counter() - start:.2f} s)")


def test_01_exhaustive_equivalence(capsys):
    with criterion(capsys, 1, "criterion <=> brute-force order for every unit, p <= 31"):
        start = time.perf_counter()
        for ctx in theorem_contexts(31):
            r = verify_theorem(ctx, oracle="brute_force")
            assert r.mismatches == [], (ctx, r.mismatches)
            assert r.generator_count_theorem == r.generator_count_oracle
        assert time.perf_counter() - start < 10


def test_02_generator_census(capsys):
    with criterion(capsys, 2, "number of generators = phi(p^2 - 1), odd p <= 199"):
        start = time.perf_counter()
        for p in naive_odd_primes(199):
            ctx = FieldContext.for_prime(p)
            assert len(enumerate_generators(ctx)) == naive_totient(p * p - 1), p
        assert time.perf_counter() - start < 60


def test_03_residue_count(capsys):
    with criterion(capsys, 3, "|Q(p)| = (p - 1)/2, odd p <= 499"):
        for p in naive_odd_primes(499):
            assert len(quadratic_residues(p)) == (p - 1) // 2, p


def test_04_legendre_multiplicative(capsys):
    with criterion(capsys, 4, "Legendre symbol multiplicative on all pairs, odd p <= 101"):
        for p in naive_odd_primes(101):
            sym = {a: legendre_symbol(a, p) for a in range(1, p)}
            for a in range(1, p):
                for b in range(1, p):
                    assert sym[a * b % p] == sym[a] * sym[b], (p, a, b)


def test_05_norm_onto_and_kernel_order(capsys):
    with criterion(capsys, 5, "norm onto F_p*, |Ker N| = p + 1, odd p <= 101"):
        for p in naive_odd_primes(101):
            ctx = FieldContext.for_prime(p)
            norms = [u.norm().value for u in enumerate_units(ctx)]
            assert set(norms) == set(range(1, p)), p
            assert norms.count(1) == p + 1, p


def test_06_f_onto_kernel_with_base_field_kernel(capsys):
    with criterion(capsys, 6, "image of f = Ker N and f(u) = 1 <=> b = 0, odd p <= 101"):
        for p in naive_odd_primes(101):
            ctx = FieldContext.for_prime(p)
            kernel, image = set(), set()
            for u in enumerate_units(ctx):
                fu = u.f_map()
                image.add(fu.coords)
                if u.in_kernel_of_norm():
                    kernel.add(u.coords)
                assert (fu.coords == (1, 0)) == (u.b == 0), (p, u)
            assert image == kernel, p


def test_07_f_lands_in_kernel(capsys):
    with criterion(capsys, 7, "norm(f(u)) = 1 for every unit, odd p <= 101"):
        for p in naive_odd_primes(101):
            ctx = FieldContext.for_prime(p)
            for u in enumerate_units(ctx):
                assert u.f_map().norm() == 1, (p, u)


def test_08_no_half_order_generators(capsys):
    with criterion(capsys, 8, "ord(N u) = p-1 and ord(f u) = p+1 never give ord(u) = (p^2-1)/2, p <= 31"):
        ctxs = theorem_contexts(31)
        assert {c.p % 4 for c in ctxs} == {1, 3}
        for ctx in ctxs:
            p, half = ctx.p, ctx.unit_count // 2
            hits = 0
            for u in enumerate_units(ctx):
                if naive_order_mod(u.norm().value, p) != p - 1:
                    continue
                if naive_pair_order(u.f_map().coords, p, ctx.n) != p + 1:
                    continue
                hits += 1
                assert brute_force_order(u) != half, (ctx, u)
            assert hits == naive_totient(ctx.unit_count)


def test_09_oracle_agreement(capsys):
    with criterion(capsys, 9, "brute-force order = factored multiplicative order, every unit, p <= 31"):
        for ctx in theorem_contexts(31):
            for u in enumerate_units(ctx):
                assert brute_force_order(u) == multiplicative_order(
                    u, ctx.unit_count, ctx.fact_units, identity=ctx.one
                ), (ctx, u)


def _verify_json(threads):
    out = io.StringIO()
    code = main(["verify", "--max-p", "31", "--threads", str(threads), "--format", "json"], out=out)
    assert code == 0
    recs = [json.loads(line) for line in out.getvalue().splitlines()]
    for r in recs:
        r["payload"].pop("elapsed_ms")
    return recs


def test_10_verify_is_deterministic(capsys):
    with criterion(capsys, 10, "two runs of `verify --max-p 31 --threads 4` agree modulo elapsed time"):
        first, second = _verify_json(4), _verify_json(4)
        assert first == second
        assert first == _verify_json(1)
        assert [r["payload"]["p"] for r in first] == naive_odd_primes(31)

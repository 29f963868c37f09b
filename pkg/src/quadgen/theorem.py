"""Classifying generators of F_{p^2}* through the norm and the kernel map.

``u`` generates F_{p^2}* exactly when ``N(u)`` is a primitive root mod ``p``
and ``f(u) = u^2 / N(u)`` generates the norm-one subgroup ``Ker N`` of order
``p + 1``.  :func:`classify` applies that criterion using only the
factorizations of ``p - 1`` and ``p + 1``.  :func:`brute_force_order` is an
independent oracle that multiplies until it reaches 1 and never touches a
factorization; :func:`verify_theorem` runs both over every unit.
"""

from __future__ import annotations

import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .errors import ContextMismatch, ZeroElement
from .factor import euler_totient, multiplicative_order
from .modular import FpElement, is_primitive_root
from .quadext import FieldContext, Fp2Element, enumerate_units

__all__ = [
    "BRUTE_FORCE_MAX_P",
    "ClassificationResult",
    "VerificationReport",
    "MethodTiming",
    "BenchmarkSummary",
    "classify",
    "brute_force_order",
    "factored_order",
    "is_generator_by_group_order",
    "verify_theorem",
    "enumerate_generators",
    "find_generator",
    "benchmark_classification",
]

# above this prime the oracle in verify_theorem switches to factored orders
BRUTE_FORCE_MAX_P = 31


@dataclass(frozen=True)
class ClassificationResult:
    element: Fp2Element
    norm_value: FpElement
    norm_is_primitive: bool
    f_value: Fp2Element
    f_order: int
    f_generates_kernel: bool
    is_generator: bool

    def to_dict(self) -> dict:
        return {
            "element": self.element.to_dict(),
            "norm": self.norm_value.value,
            "norm_is_primitive": self.norm_is_primitive,
            "f_value": self.f_value.to_dict(),
            "f_order": self.f_order,
            "f_generates_kernel": self.f_generates_kernel,
            "is_generator": self.is_generator,
        }


@dataclass
class VerificationReport:
    """Outcome of checking the criterion against an order oracle on every unit.

    ``mismatches`` holds ``(a, b)`` pairs where the two disagree, in
    enumeration order.
    """

    p: int
    n: int
    oracle: str
    total_units: int
    generator_count_theorem: int
    generator_count_oracle: int
    mismatches: list[tuple[int, int]]
    phi_p2_minus_1: int
    kernel_size: int
    norm_image_size: int
    f_image_size: int
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        d = asdict(self)
        d["mismatches"] = [{"a": a, "b": b} for a, b in self.mismatches]
        return d


def _check(u: Fp2Element, ctx: FieldContext | None) -> FieldContext:
    if ctx is None:
        ctx = u.ctx
    elif u.ctx is not ctx and u.ctx != ctx:
        raise ContextMismatch(f"element of {u.ctx} classified over {ctx}")
    if u.is_zero():
        raise ZeroElement("0 is not in F_{p^2}*")
    return ctx


def classify(u: Fp2Element, ctx: FieldContext | None = None) -> ClassificationResult:
    """Decide whether ``u`` generates F_{p^2}* from N(u) and f(u) alone."""
    ctx = _check(u, ctx)
    nv = u.norm()
    norm_prim = is_primitive_root(nv, ctx.fact_p_minus_1)
    fv = u.f_map()
    f_order = multiplicative_order(fv, ctx.p + 1, ctx.fact_p_plus_1, identity=ctx.one)
    f_gen = f_order == ctx.p + 1
    return ClassificationResult(u, nv, norm_prim, fv, f_order, f_gen, norm_prim and f_gen)


def brute_force_order(u: Fp2Element, ctx: FieldContext | None = None) -> int:
    """Least ``k >= 1`` with ``u**k == 1``, by repeated multiplication."""
    ctx = _check(u, ctx)
    p, n = ctx.p, ctx.n
    a0, b0 = u.a, u.b
    a, b = a0, b0
    k = 1
    while not (a == 1 and b == 0):
        a, b = (a * a0 + n * b * b0) % p, (a * b0 + b * a0) % p
        k += 1
    return k


def factored_order(u: Fp2Element, ctx: FieldContext | None = None) -> int:
    """Order of ``u`` via the factorization of ``p^2 - 1``."""
    ctx = _check(u, ctx)
    return multiplicative_order(u, ctx.unit_count, ctx.fact_units, identity=ctx.one)


def is_generator_by_group_order(u: Fp2Element, ctx: FieldContext | None = None) -> bool:
    """Primitive-element test working directly in the group of order ``p^2 - 1``."""
    ctx = _check(u, ctx)
    m = ctx.unit_count
    one = ctx.one
    return all(u ** (m // q) != one for q in ctx.fact_units.primes)


_ORACLES = {"brute_force": brute_force_order, "factored": factored_order}


def _scan(ctx: FieldContext, a_values: range, oracle: str):
    order_of = _ORACLES[oracle]
    full = ctx.unit_count
    thm = orc = kernel = 0
    mismatches = []
    norms, fs = set(), set()
    p = ctx.p
    for a in a_values:
        for b in range(1 if a == 0 else 0, p):
            u = Fp2Element._raw(a, b, ctx)
            res = classify(u, ctx)
            by_oracle = order_of(u, ctx) == full
            thm += res.is_generator
            orc += by_oracle
            if res.is_generator != by_oracle:
                mismatches.append((a, b))
            nv = res.norm_value.value
            kernel += nv == 1
            norms.add(nv)
            fs.add(res.f_value.coords)
    return thm, orc, kernel, mismatches, norms, fs


def _chunks(p: int, parts: int) -> list[range]:
    parts = max(1, min(parts, p))
    step = -(-p // parts)
    return [range(lo, min(lo + step, p)) for lo in range(0, p, step)]


def verify_theorem(ctx: FieldContext, *, oracle: str = "auto", threads: int = 1) -> VerificationReport:
    """Compare :func:`classify` with an order oracle on all ``p^2 - 1`` units.

    ``oracle`` is ``"brute_force"``, ``"factored"`` or ``"auto"`` (brute
    force up to ``BRUTE_FORCE_MAX_P``).  With ``threads > 1`` the units are
    split by their ``a`` coordinate across worker processes; partial
    results are merged in enumeration order, so the report is identical to
    a single-threaded run apart from ``elapsed_ms``.  Mismatches are
    collected, not raised.
    """
    if oracle == "auto":
        oracle = "brute_force" if ctx.p <= BRUTE_FORCE_MAX_P else "factored"
    if oracle not in _ORACLES:
        raise ValueError(f"unknown oracle {oracle!r}")
    start = time.perf_counter()
    if threads > 1:
        chunks = _chunks(ctx.p, threads * 4)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_scan, [ctx] * len(chunks), chunks, [oracle] * len(chunks)))
    else:
        parts = [_scan(ctx, range(ctx.p), oracle)]
    thm = orc = kernel = 0
    mismatches: list[tuple[int, int]] = []
    norms: set = set()
    fs: set = set()
    for t, o, k, mm, ns, f in parts:
        thm += t
        orc += o
        kernel += k
        mismatches.extend(mm)
        norms |= ns
        fs |= f
    elapsed = (time.perf_counter() - start) * 1000
    return VerificationReport(
        p=ctx.p,
        n=ctx.n,
        oracle=oracle,
        total_units=ctx.unit_count,
        generator_count_theorem=thm,
        generator_count_oracle=orc,
        mismatches=mismatches,
        phi_p2_minus_1=euler_totient(ctx.fact_units),
        kernel_size=kernel,
        norm_image_size=len(norms),
        f_image_size=len(fs),
        elapsed_ms=elapsed,
    )


def enumerate_generators(ctx: FieldContext) -> list[Fp2Element]:
    return [u for u in enumerate_units(ctx) if classify(u, ctx).is_generator]


def find_generator(ctx: FieldContext) -> Fp2Element:
    for u in enumerate_units(ctx):
        if classify(u, ctx).is_generator:
            return u
    raise AssertionError(f"{ctx} has no generator; F_(p^2)* should be cyclic")


@dataclass(frozen=True)
class MethodTiming:
    method: str
    mean_us: float
    median_us: float


@dataclass(frozen=True)
class BenchmarkSummary:
    p: int
    n: int
    sample_size: int
    generators_in_sample: int
    max_brute_force_steps: int
    agreement: bool
    timings: tuple[MethodTiming, ...]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["timings"] = [asdict(t) for t in self.timings]
        return d


def benchmark_classification(ctx: FieldContext, sample_size: int, *, seed: int = 0) -> BenchmarkSummary:
    """Time three generator tests on a reproducible sample of units.

    The methods are the norm/kernel criterion, a primitive-element test in
    the full group of order ``p^2 - 1``, and the brute-force order scan.
    No ordering of the timings is asserted; ``agreement`` records whether
    all three gave the same verdict on every sampled element.
    """
    if sample_size < 1:
        raise ValueError("sample_size must be >= 1")
    rng = random.Random(seed)
    p, full = ctx.p, ctx.unit_count
    sample = []
    for _ in range(sample_size):
        i = rng.randrange(1, p * p)
        sample.append(Fp2Element._raw(i // p, i % p, ctx))

    def timed(fn):
        out, times = [], []
        for u in sample:
            t0 = time.perf_counter_ns()
            out.append(fn(u))
            times.append((time.perf_counter_ns() - t0) / 1000)
        return out, MethodTiming(fn.__name__, statistics.fmean(times), statistics.median(times))

    def theorem_criterion(u):
        return classify(u, ctx).is_generator

    def full_group_order(u):
        return is_generator_by_group_order(u, ctx)

    def brute_force(u):
        return brute_force_order(u, ctx)

    v1, t1 = timed(theorem_criterion)
    v2, t2 = timed(full_group_order)
    orders, t3 = timed(brute_force)
    v3 = [k == full for k in orders]
    return BenchmarkSummary(
        p=p,
        n=ctx.n,
        sample_size=sample_size,
        generators_in_sample=sum(v3),
        max_brute_force_steps=max(orders),
        agreement=v1 == v2 == v3,
        timings=(t1, t2, t3),
    )

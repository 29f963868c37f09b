"""Deciding whether u generates F_{p^2}* from N(u) and f(u) alone."""

from quadgen import (
    FieldContext,
    brute_force_order,
    classify,
    enumerate_generators,
    euler_totient,
    find_generator,
    verify_theorem,
)

ctx = FieldContext(3, 2)
for a, b in [(1, 1), (0, 1), (2, 0)]:
    r = classify(ctx(a, b))
    print(
        f"{r.element}:  N = {r.norm_value} primitive={r.norm_is_primitive}  "
        f"f = {r.f_value} of order {r.f_order}  ->  generator={r.is_generator}  "
        f"(brute-force order {brute_force_order(r.element)})"
    )

# A larger field: first generator and the total count.
ctx = FieldContext.for_prime(43)
g = find_generator(ctx)
print(ctx, "first generator", g, "order", brute_force_order(g))
gens = enumerate_generators(ctx)
print(len(gens), "generators; phi(p^2 - 1) =", euler_totient(ctx.fact_units))

# Cross-check against the brute-force order of every unit.
for p in (5, 13, 19, 31):
    rep = verify_theorem(FieldContext.for_prime(p))
    print(p, rep.generator_count_theorem, rep.generator_count_oracle, "mismatches:", len(rep.mismatches))

"""Timing the criterion against a full-group order test and a brute-force scan."""

from quadgen import FieldContext, benchmark_classification

for p in (31, 101, 211):
    s = benchmark_classification(FieldContext.for_prime(p), 300)
    print(f"p = {p}: agreement={s.agreement}, {s.generators_in_sample}/{s.sample_size} generators")
    for t in s.timings:
        print(f"    {t.method:18s} mean {t.mean_us:9.1f} us   median {t.median_us:9.1f} us")

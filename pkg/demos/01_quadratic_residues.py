"""Squares, non-squares and primitive roots in F_p."""

from quadgen import FpElement, factorize, is_primitive_root, legendre_symbol, quadratic_residues, smallest_nonresidue

p = 23

# Exactly half of the units are squares.
Q = sorted(x.value for x in quadratic_residues(p))
print(f"Q({p}) = {Q}")
print(f"{len(Q)} residues, {(p - 1) // 2} expected")

# The Legendre symbol is computed from a**((p-1)/2); compare with the set above.
print([legendre_symbol(a, p) for a in range(1, p)])

# -1 is a square exactly when p = 1 mod 4.
for q in (13, 19, 29, 31):
    print(q, q % 4, legendre_symbol(-1, q))

# The least non-square is a convenient default for building F_{p^2}.
print("smallest nonresidue mod", p, "is", smallest_nonresidue(p))

# Primitive roots: only factors of p - 1 are needed to test one.
f = factorize(p - 1)
roots = [a for a in range(1, p) if is_primitive_root(FpElement(a, p), f)]
print("p - 1 =", f, "; primitive roots:", roots)

# None of them is a square.
print(set(roots) & set(Q))

"""Arithmetic in F_p(sqrt n), the conjugate, the norm and the kernel map f."""

from quadgen import FieldContext, enumerate_units

ctx = FieldContext(7, -1)  # -1 is a non-square mod 7, so sqrt(-1) works
print(ctx, "n reduced to", ctx.n)

u = ctx(2, 5)
v = ctx(3, 1)
print("u =", u, " v =", v)
print("u * v =", u * v)
print("u / v =", u / v, " check:", (u / v) * v == u)
print("u^48 =", u**48)

# Frobenius: raising to the p-th power is conjugation.
print(u**7, u.conjugate())

# N(u) = u * conj(u) lands in the prime field.
print("N(u) =", u.norm(), " u*conj(u) =", u * u.conjugate())

# f(u) = u^2 / N(u) always has norm one.
fu = u.f_map()
print("f(u) =", fu, " N(f(u)) =", fu.norm(), " u/conj(u) =", u / u.conjugate())

# Census over the whole unit group.
units = list(enumerate_units(ctx))
norms = {w.norm().value for w in units}
kernel = [w for w in units if w.in_kernel_of_norm()]
images = {w.f_map() for w in units}
print(len(units), "units;", "norm image size", len(norms), "; |Ker N| =", len(kernel))
print("f hits exactly Ker N:", images == set(kernel))
print("f(u) = 1 only on the prime field:", all((w.f_map() == 1) == (w.b == 0) for w in units))

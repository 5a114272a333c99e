"""Quaternion arithmetic and the symplectic decomposition.

Walks through the number system everything else is built on: the Hamilton
product and its non-commutativity, conjugation, the scalar part, the
symplectic (complex-pair) view, right multiplication by i, and the
parallelism test used later to constrain basis states.
"""

import numpy as np

from quatosc import Quaternion, conj, is_parallel, mul, right_mul_i, sc
from quatosc.quaternion import I, J

print("=== imaginary units ===")
print("i*j  =", mul(I, J), " (k)")
print("j*i  =", mul(J, I), " (-k: the product is non-commutative)")
print("i*i  =", mul(I, I))

q = Quaternion(0.5, -1.0, 2.0, 0.25)
print("\n=== a generic quaternion ===")
print("q            =", q)
print("conj(q)      =", conj(q))
print("sc(q)        =", sc(q))
print("|q|^2        =", abs(q) ** 2)
print("sc(q conj q) =", sc(q * conj(q)), " (same thing)")

print("\n=== symplectic pair: q = z0 + z1 j ===")
z0, z1 = q.to_symplectic()
print("z0 =", z0, " z1 =", z1)
print("round trip:", Quaternion.from_symplectic(z0, z1) == q)

print("\n=== right multiplication by i ===")
print("q*i =", right_mul_i(q))
w0, w1 = right_mul_i(q).to_symplectic()
print("in symplectic form: (z0, z1) -> (i z0, -i z1)")
print("  i*z0  =", 1j * z0, " got", w0)
print("  -i*z1 =", -1j * z1, " got", w1)
out = q
for _ in range(4):
    out = right_mul_i(out)
print("four right-i applications return q:", out == q)

print("\n=== parallelism ===")
print("parallel(q, q)       :", is_parallel(q, q))
print("parallel(i, j)       :", is_parallel(I, J), " (i conj(j) = -k is imaginary)")
print("parallel(2+2i, 1+i)  :", is_parallel(Quaternion(2, 2, 0, 0), Quaternion(1, 1, 0, 0)))

rng = np.random.default_rng(0)
vals = []
for _ in range(2000):
    p = Quaternion(*rng.uniform(-1, 1, 4))
    r = Quaternion(*rng.uniform(-1, 1, 4))
    vals.append(abs(abs(p * r) - abs(p) * abs(r)))
print("\nnorm multiplicativity |pq| = |p||q| over 2000 random draws:")
print("max deviation =", max(vals))

"""Two-slot oscillator states and their energies.

Builds the basic solution family: slot 0 carries cos(theta) times the
level-n eigenfunction, slot 1 carries sin(theta) times the conjugated
level-m one.  The energy has two equivalent closed forms and both are
reproduced by the expectation value of the Hamiltonian, computed once by
exact Gaussian moments and once by Gauss-Hermite quadrature.
"""

import math

import numpy as np

from quatosc import (
    QPair,
    apply,
    energy_nm,
    energy_nm_correction_form,
    evaluate,
    expectation,
    hamiltonian,
    inner,
    inner_quad,
    make_rule,
    psi_n,
    psi_nm,
)

print("=== the complex eigenfunctions sit in slot 0 ===")
s0 = psi_n(0)
print("psi_0 at the origin:", evaluate(s0, 0.0, 0.0), " (pi^-1/4 =", math.pi ** -0.25, ")")
print("norm at t = 0 and t = 2.5:", inner(s0, s0, 0.0), inner(s0, s0, 2.5))

print("\n=== a genuinely quaternionic state ===")
q = QPair(n=1, m=2, theta=math.pi / 4)
s = psi_nm(q)
for x in (0.0, 0.5, 1.0):
    print(f"  value at x={x:3.1f}, t=0:", evaluate(s, x, 0.0))
print("norm:", inner(s, s, 0.0))

print("\n=== energies: two closed forms and two integration routes ===")
h = hamiltonian()
rules = [make_rule("gauss_hermite", 64)]
print(f"{'n':>2} {'m':>2} {'theta':>7}  {'weighted':>10} {'corrected':>10} {'expectation':>12} {'quadrature':>12}")
for n, m, theta in [(0, 0, 0.3), (1, 2, math.pi / 4), (1, 2, math.pi / 2), (3, 1, math.pi / 6)]:
    qq = QPair(n, m, theta)
    st = psi_nm(qq)
    e1 = energy_nm(qq)
    e2 = energy_nm_correction_form(qq)
    e3 = expectation(h, st, 0.0)
    e4 = inner_quad(apply(h, st), st, 0.0, rules)
    print(f"{n:>2} {m:>2} {theta:7.4f}  {e1:10.6f} {e2:10.6f} {e3:12.8f} {e4:12.8f}")

print("\nthe zero-point energy is angle independent:")
for theta in (0.0, 0.5, 1.0, math.pi / 2):
    print(f"  theta={theta:5.3f}: E =", energy_nm(QPair(0, 0, theta)))

print("\nmixing interpolates between the two levels (n=0, m=4):")
for theta in np.linspace(0.0, math.pi / 2, 5):
    print(f"  theta={theta:5.3f}: E =", energy_nm(QPair(0, 4, float(theta))))

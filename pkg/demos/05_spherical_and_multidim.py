"""Higher-dimensional states: Cartesian products, splits, and the spherical
solution families.

Cartesian products multiply per-direction two-slot states with the
quaternion product law; reordering the factors changes pointwise values
but not norms or energies.  In spherical coordinates the radial profiles
pair generalized Laguerre polynomials across the slots and the angular
factors pair spherical harmonics; both families come with Gram matrices
and, for the radial part, an exact differential-equation residual.
"""

import math

import numpy as np

from quatosc import (
    QPair,
    QSphericalHarmonic,
    SplitSpec,
    angular_gram,
    cartesian_energy,
    energy_nm,
    evaluate,
    full_spherical_energy,
    inner,
    product_state,
    radial_energy,
    radial_gram,
    radial_ode_residual,
    radial_state,
    split_state,
)

np.set_printoptions(precision=6, suppress=True)

print("=== three-dimensional product state ===")
factors = [QPair(1, 2, math.pi / 4), QPair(0, 1, 0.3), QPair(2, 0, 1.1)]
s = product_state(factors)
print("norm:", inner(s, s, 0.0))
print("energy:", cartesian_energy(s), " = sum of factors:", sum(energy_nm(f) for f in factors))
rev = product_state(factors[::-1])
print("reversed factor order: norm", inner(rev, rev, 0.0), " energy", cartesian_energy(rev))
print("pointwise values differ though:",
      abs(evaluate(s, [0.4, -0.2, 0.9], 0.0) - evaluate(rev, [0.4, -0.2, 0.9], 0.0)) > 1e-3)

print("\n=== split state: the slots oscillate along different axes ===")
spec = SplitSpec(dims=2, slot0_dims={0}, slot1_dims={1}, n=2, m=1, theta=math.pi / 3)
sp = split_state(spec)
print("norm:", inner(sp, sp, 0.0))
print("energy:", cartesian_energy(sp), " (ground padding contributes 1/2 per absent axis)")

print("\n=== radial family ===")
for (u, v, l, theta) in [(0, 0, 0, 0.0), (1, 2, 1, math.pi / 3), (2, 4, 3, 0.6)]:
    st = radial_state(u, v, l, theta)
    print(f"  (u={u}, v={v}, l={l}, theta={theta:.3f}): "
          f"norm = {radial_gram([st]).entries[0, 0]:.12f}, "
          f"residual = {radial_ode_residual(st):.2e}, "
          f"E = {full_spherical_energy(u, v, l, theta):.6f}")

print("\nresidual scan over candidate energies for (u=1, l=2):")
st = radial_state(1, 1, 2, 0.0)
true = radial_energy(1, 2)
for shift in (-2, -1, 0, 1, 2):
    e = true + shift
    r = radial_ode_residual(st, (e, e))
    print(f"  E = {e:4.1f}: residual = {r:.3e}" + ("   <-- solves the equation" if shift == 0 else ""))

print("\n=== radial Gram: same slot structure as the one-dimensional case ===")
states = [radial_state(0, 1, 0, math.pi / 3), radial_state(0, 2, 0, math.pi / 3),
          radial_state(1, 3, 0, math.pi / 3)]
g = radial_gram(states)
print(g.entries)
print("max |entries - closed form|:", g.max_closed_form_deviation())

print("\n=== angular Gram over quaternionic spherical harmonics ===")
specs = [QSphericalHarmonic(1, 0, 1, 0.5), QSphericalHarmonic(1, 0, -1, 0.5),
         QSphericalHarmonic(2, 0, 1, 0.5), QSphericalHarmonic(2, -2, 2, 0.5)]
g = angular_gram(specs)
print(g.entries)
print("max |entries - closed form|:", g.max_closed_form_deviation())
print("azimuthal indices never enter the energy:",
      full_spherical_energy(1, 2, 1, 0.4), "for every admissible (m1, m2) pair")

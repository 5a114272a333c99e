"""Gram matrices: when do two-slot states form an orthonormal set?

The inner product of two states with angles (theta_a, theta_b) and levels
(n, m), (n', m') has the closed form

    cos(theta_a) cos(theta_b) delta_{n n'} + sin(theta_a) sin(theta_b) delta_{m m'}.

Equal angles alone therefore do NOT give orthogonality: basis elements
must also avoid sharing an n (or an m).  The Gram report shows both the
computed matrix and the closed form, plus a pointwise parallelism table.
"""

import math

import numpy as np

from quatosc import QPair, gram

np.set_printoptions(precision=6, suppress=True)

print("=== equal angles, index-disjoint levels: an orthonormal set ===")
disjoint = [QPair(0, 1, 0.7), QPair(2, 3, 0.7), QPair(4, 5, 0.7)]
g = gram(disjoint, t=0.0)
print(g.entries)
print("max deviation from identity:", g.max_identity_deviation())

print("\n=== equal angles but a shared first index ===")
shared = [QPair(0, 1, math.pi / 3), QPair(0, 2, math.pi / 3)]
g = gram(shared, t=0.0)
print(g.entries)
print("off-diagonal equals cos^2(pi/3) =", math.cos(math.pi / 3) ** 2)

print("\n=== mixed angles ===")
mixed = [QPair(1, 2, 0.3), QPair(1, 3, 1.1), QPair(0, 2, 0.8)]
g = gram(mixed, t=0.4)
print("entries:")
print(g.entries)
print("closed form:")
print(g.closed_form)
print("max |entries - closed form|:", g.max_closed_form_deviation())

print("\n=== the Gram matrix does not evolve in time ===")
g0 = gram(mixed, t=0.0)
g1 = gram(mixed, t=1.7)
print("max |G(0) - G(1.7)|:", np.max(np.abs(g0.entries - g1.entries)))

print("\n=== pointwise parallelism table ===")
pairs = [QPair(0, 1, 0.7), QPair(0, 1, 0.7), QPair(2, 3, 0.7), QPair(2, 3, 0.2)]
g = gram(pairs, t=0.0)
print("labels:", [(p.n, p.m, p.theta) for p in pairs])
print("parallel (5 sample points each):")
print(g.parallel)
print("equal angles:")
print(g.theta_equal)
print("identical states are parallel to themselves; distinct states are")
print("generally not parallel pointwise even at equal angles, which is why")
print("orthogonality needs the index-disjointness condition above.")

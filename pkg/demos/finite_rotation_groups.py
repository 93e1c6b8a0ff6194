"""
Finite rotation groups as Moebius transformations
=================================================

The two vertex groups everything else builds on: the dihedral group of
order 2n generated by a rotation about 0/infinity and the half turn
z -> 1/z, and the order-12 tetrahedral rotation group.
"""

from origami_schottky.moebius import (
    MoebiusMap,
    a4_generators,
    dn_generators,
    projective_closure,
)

identity = MoebiusMap.identity()

# dihedral family: A is the rotation z -> e^(2 pi i / n) z, B is z -> 1/z
for n in range(2, 7):
    a, b = dn_generators(n)
    an = identity
    for _ in range(n):
        an = an * a
    print(f"n={n}:")
    print(f"  A^{n} residual      {an.proj_distance(identity):.2e}")
    print(f"  B^2 residual       {(b * b).proj_distance(identity):.2e}")
    print(f"  (AB)^2 residual    {((a * b) * (a * b)).proj_distance(identity):.2e}")
    closure = projective_closure([a, b])
    print(f"  group order        {len(closure)}")

# the tetrahedral group: A has order 3, B order 2, AB order 3
a, b = a4_generators()
print("tetrahedral group:")
print(f"  A fixed points     {a.fixed_points()}")
print(f"  B sends 3 to       {b(3.0)}")
closure = projective_closure([a, b])
print(f"  group order        {len(closure)}")

# classification sanity: every nonidentity element of a finite Moebius
# group is elliptic of finite order
orders = sorted(m.classify().order or 1 for m in closure)
print(f"  element orders     {orders}")

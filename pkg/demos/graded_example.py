"""
Group-graded vector spaces
==========================

A = F_e + F_g + ... + F_{g^(p-1)} in Vec_G for G cyclic of order p.  In
characteristic p the algebra has a one dimensional HH1 spanned by the
derivation that scales F_{g^a} by a.  In characteristic 0 it is separable.
"""

from hochcat.algebra_object import graded_group_algebra, is_separable
from hochcat.exactlin import GF, QQ
from hochcat.findim_algebra import cyclic_group
from hochcat.hochschild import hh0, hh1, hh2, hh_via_resolution

for p in (2, 3, 5):
    A = graded_group_algebra(cyclic_group(p), GF(p))
    res = hh1(A)
    (f,) = res.basis
    # the value of f on each graded piece
    scalars = [int(f.blocks[(k, k)][0, 0]) if (k, k) in f.blocks else 0 for k in range(p)]
    print(f"C{p} over F{p}: hh0={hh0(A).dim} hh1={res.dim} derivation scalars={scalars}")
    print("   oracle hh1 =", hh_via_resolution(A, 1).dim)

    A0 = graded_group_algebra(cyclic_group(p), QQ)
    print(f"C{p} over Q: separable={is_separable(A0)} hh1={hh1(A0).dim} hh2={hh2(A0).dim}")

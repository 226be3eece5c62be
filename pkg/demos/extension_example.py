"""
The self-extension 1 -x-> 1 in bimodules over the dual numbers
==============================================================

A0 = A1 = 1 and a is multiplication by x.  We compute HH0, HH1 and HH2 in
closed form, compare HH2 with Ext1(A, A), look at the kernel of a, and run
the generic resolution engine on the same algebra.
"""

from hochcat.catalog import backend_config, build_backend, build_builtin
from hochcat.algebra_object import check_axioms, is_separable, kernel_of_a
from hochcat.exactlin import QQ
from hochcat.freyd import ext_dim, projective_resolution
from hochcat.hochschild import build_replacement_resolution, hh0, hh1, hh2, hh_via_resolution

cat = build_backend(backend_config("cd_extension"), QQ)
A = build_builtin("cd_extension", cat)
print("axioms:", check_axioms(A).checks)

# closed forms on the reduced complex
dims = [hh0(A).dim, hh1(A).dim, hh2(A).dim]
print("hh0, hh1, hh2 =", dims)

# Ext1 in the abelianization, from a projective resolution of A
print("ext1(A, A) =", ext_dim(A.a_obj, A.a_obj, 1))
for d in projective_resolution(A.a_obj, 3):
    print("  resolution map on", d.source, "->", d.target, ":", d.to_matrix().tolist())

# the kernel of a is presented by 1 -x-> 1 again
step = kernel_of_a(A)
print("kernel of a:", step.k, " b =", step.incl.f0.to_matrix().tolist())

# the replacement resolution and the resolution oracle
res = build_replacement_resolution(A)
for name, ok in res.checks.items():
    print(f"  {name}: {ok}")
# mu: AA -> A is invertible here, so A is a summand of a free bimodule and
# the oracle sees nothing above degree 0; the closed degree-2 form sees Ext1
print("separable:", is_separable(A))
print("oracle hh0..2 =", [hh_via_resolution(A, n).dim for n in range(3)])

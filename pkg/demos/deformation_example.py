"""
First order deformations
========================

A 2-cocycle (g0, g1) of the extension algebra gives an algebra over
k[t]/(t^2), realised by doubling every object.  We build it for
(g0, g1) = (0, id), print the solved witnesses, and show a pair that is not
a cocycle being rejected.
"""

import random

from hochcat.catalog import backend_config, build_backend, build_builtin
from hochcat.algebra_object import TwoCochain, deform, is_cocycle
from hochcat.errors import HochError
from hochcat.exactlin import QQ
from hochcat.invariants import random_morphism
from hochcat.monoidal_backend import identity_mor, tensor_obj, zero_mor

cat = build_backend(backend_config("cd_extension"), QQ)
A = build_builtin("cd_extension", cat)
AA0 = tensor_obj(A.A0, A.A0)[0]

d = deform(A, TwoCochain(zero_mor(AA0, A.A0), identity_mor(A.A1)))
print("h01 =", d.h01.to_matrix().tolist())
print("h10 =", d.h10.to_matrix().tolist())
print("eta1 =", d.eta1.to_matrix().tolist())
for name, ok in d.report.checks.items():
    print(f"  {name}: {ok}")

# on the dual-number inflation most random pairs fail the cocycle conditions
B = build_builtin("cd_extension+dual", cat)
BB0 = tensor_obj(B.A0, B.A0)[0]
rng = random.Random(0)
g = TwoCochain(random_morphism(BB0, B.A0, rng), random_morphism(B.A1, B.A0, rng))
print("random pair is a cocycle:", is_cocycle(B, g))
try:
    deform(B, g)
except HochError as exc:
    print("rejected:", exc)

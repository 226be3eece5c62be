"""
Inflation by a finite dimensional algebra
=========================================

Inflating the cell algebra by the dual numbers reproduces the classical
Hochschild cohomology of the dual numbers; inflating by 2x2 matrices leaves
every dimension unchanged.
"""

from hochcat.catalog import backend_config, build_backend, build_builtin
from hochcat.algebra_object import inflate
from hochcat.exactlin import QQ
from hochcat.findim_algebra import classical_hh_dim, dual_numbers, matrix_algebra
from hochcat.hochschild import hh0, hh1, hh2, kunneth_check

cat = build_backend(backend_config("cell_D"), QQ)
A = build_builtin("cell_D", cat)
D = dual_numbers(QQ)

for n in range(3):
    k = kunneth_check(A, D, n)
    print(f"degree {n}: inflated {k.left}, sum of products {k.right}, classical HH(D) {classical_hh_dim(D, n)}")


def dims(alg):
    return [hh0(alg).dim, hh1(alg).dim, hh2(alg).dim]


for name in ("cell_D", "cd_extension"):
    alg = build_builtin(name, cat)
    print(name, dims(alg), "->", dims(inflate(alg, matrix_algebra(2, QQ))), "after Mat_2")

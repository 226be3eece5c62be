import pytest

from hochcat.exactlin import GF, QQ
from hochcat.findim_algebra import (
    StructureAlgebra,
    check_algebra,
    classical_hh_dim,
    cyclic_group,
    dual_numbers,
    group_algebra,
    matrix_algebra,
    separability_idempotent,
    Group,
)


def test_constructors_pass_axioms():
    for r in (dual_numbers(), matrix_algebra(2), matrix_algebra(3), group_algebra(cyclic_group(3))):
        assert check_algebra(r).passed
    D = dual_numbers()
    assert D.dim == 2
    x = D.basis_vector(1)
    assert D.mul(x, x) == [0, 0]
    assert group_algebra(cyclic_group(3)).dim == 3
    assert matrix_algebra(2).dim == 4


def test_perturbed_dual_numbers_fail():
    # x * x = 1 alone gives k[x]/(x^2 - 1), which is still an algebra
    c = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    assert check_algebra(StructureAlgebra(QQ, c, [1, 0])).passed
    # 1 * x = 1 + x breaks the unit
    c = [[[1, 0], [1, 1]], [[0, 1], [1, 0]]]
    rep = check_algebra(StructureAlgebra(QQ, c, [1, 0]))
    assert not rep.passed and rep.failures


def test_malformed_group_tables_rejected():
    with pytest.raises(ValueError):
        Group([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        Group([[0, 1, 2], [1, 2, 0]])


def test_classical_hh_examples():
    M2 = matrix_algebra(2)
    assert classical_hh_dim(M2, 0) == 1
    assert classical_hh_dim(M2, 1) == 0
    # dual numbers: the periodic resolution gives D, xD, D/2xD, ... by hand
    D = dual_numbers(QQ)
    assert [classical_hh_dim(D, n) for n in range(4)] == [2, 1, 1, 1]
    D2 = dual_numbers(GF(2))
    assert [classical_hh_dim(D2, n) for n in range(4)] == [2, 2, 2, 2]
    with pytest.raises(ValueError):
        classical_hh_dim(D, 4)


@pytest.mark.parametrize("r", [dual_numbers(), matrix_algebra(2), group_algebra(cyclic_group(3)),
                               group_algebra(cyclic_group(3), GF(3))])
def test_hh0_is_centre(r):
    assert classical_hh_dim(r, 0) == len(r.center_basis())


@pytest.mark.parametrize("r", [matrix_algebra(2), matrix_algebra(2, GF(3)), group_algebra(cyclic_group(2)),
                               group_algebra(cyclic_group(3), GF(2))])
def test_separable_algebras_have_no_higher_hh(r):
    assert separability_idempotent(r) is not None
    assert [classical_hh_dim(r, n) for n in (1, 2, 3)] == [0, 0, 0]


def test_modular_group_algebra_is_not_separable():
    assert separability_idempotent(group_algebra(cyclic_group(3), GF(3))) is None
    assert separability_idempotent(dual_numbers()) is None


def test_json_round_trip():
    r = matrix_algebra(2, GF(5))
    back = StructureAlgebra.from_json(r.to_json(), GF(5))
    assert back.c == r.c and back.unit_coords == r.unit_coords

import random

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from hochcat.exactlin import GF, QQ, SparseEchelon, kernel_basis, quotient, rank, solve


def test_field_arithmetic_and_format():
    assert QQ.format(QQ("3/6")) == "1/2"
    assert QQ.format(QQ(-4)) == "-4"
    F5 = GF(5)
    assert F5.format(F5(7)) == "2"
    assert F5("1/2") == F5(3)
    with pytest.raises(ValueError):
        GF(4)


def test_rank_examples():
    assert rank(QQ.identity(2)) == 2
    assert rank(QQ.matrix(3, 4)) == 0
    assert rank(GF(2).from_rows([[1, 1], [1, 1]])) == 1


def test_kernel_examples():
    assert kernel_basis(QQ.identity(3)) == []
    assert len(kernel_basis(QQ.matrix(2, 3))) == 3
    F2 = GF(2)
    (v,) = kernel_basis(F2.from_rows([[1, 1], [1, 1]]))
    assert [int(x) for x in v] == [1, 1]


def test_solve_examples():
    b = [QQ(2), QQ(-1)]
    assert solve(QQ.identity(2), b) == b
    assert solve(QQ.matrix(2, 2), [QQ(1), QQ(0)]) is None
    assert solve(QQ.from_rows([[2]]), [QQ(1)]) == [QQ("1/2")]
    with pytest.raises(ValueError):
        solve(QQ.identity(2), [QQ(1)])


def test_quotient_examples():
    q = quotient(3, [], QQ)
    assert q.dim == 3 and q.project([1, 2, 3]) == [1, 2, 3]
    assert quotient(2, [[1, 0], [0, 1]], QQ).dim == 0
    q = quotient(2, [[1, 1]], QQ)
    assert q.dim == 1
    assert q.project([1, 0]) != [0]
    assert q.project([1, 1]) == [0]


fields = st.sampled_from([0, 2, 3, 5])


def _random_matrix(p, nr, nc, seed):
    rng = random.Random(seed)
    F = QQ if p == 0 else GF(p)
    rows = [[rng.randint(-2, 2) if rng.random() < 0.6 else 0 for _ in range(nc)] for _ in range(nr)]
    return F, rows, F.from_rows(rows, nc) if nr else F.matrix(0, nc)


@settings(max_examples=60, deadline=None)
@given(fields, st.integers(1, 6), st.integers(1, 6), st.integers(0, 10 ** 6))
def test_rank_nullity_against_oracle(p, nr, nc, seed):
    F, rows, m = _random_matrix(p, nr, nc, seed)
    r = rank(m)
    assert r == oracle.rank(rows, p)
    ker = kernel_basis(m)
    assert r + len(ker) == nc
    for v in ker:
        col = F.from_columns([v], nc)
        assert all(x == 0 for row in oracle.to_ints(m * col) for x in row)


@settings(max_examples=60, deadline=None)
@given(fields, st.integers(1, 6), st.integers(1, 6), st.integers(0, 10 ** 6))
def test_solve_consistent_systems(p, nr, nc, seed):
    F, rows, m = _random_matrix(p, nr, nc, seed)
    rng = random.Random(seed + 1)
    x0 = [F(rng.randint(-3, 3)) for _ in range(nc)]
    b = m * F.from_columns([x0], nc)
    rhs = [b[i, 0] for i in range(nr)]
    x = solve(m, rhs)
    assert x is not None
    assert m * F.from_columns([x], nc) == b


@settings(max_examples=60, deadline=None)
@given(fields, st.integers(1, 5), st.integers(1, 6), st.integers(0, 10 ** 6))
def test_quotient_kills_subspace(p, k, n, seed):
    F, rows, _ = _random_matrix(p, k, n, seed)
    q = quotient(n, [[F(x) for x in r] for r in rows], F)
    assert q.dim == n - oracle.rank(rows, p)
    for r in rows:
        assert all(x == 0 for x in q.project(r))
    pm = q.projection_matrix()
    assert rank(pm) == q.dim


@settings(max_examples=60, deadline=None)
@given(fields, st.integers(1, 8), st.integers(1, 8), st.integers(0, 10 ** 6))
def test_sparse_echelon_matches_dense_rank(p, k, n, seed):
    F, rows, _ = _random_matrix(p, k, n, seed)
    ech = SparseEchelon(F, track=True)
    rels = []
    for r in rows:
        ok, rel = ech.add({j: F(x) for j, x in enumerate(r) if x != 0})
        if not ok:
            rels.append(rel)
    assert ech.rank == oracle.rank(rows, p)
    for rel in rels:
        total = [F.zero] * n
        for i, c in rel.items():
            for j in range(n):
                total[j] += c * F(rows[i][j])
        assert all(x == 0 for x in total)

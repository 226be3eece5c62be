"""Finite-dimensional associative algebras given by structure constants.

Includes the classical Hochschild cochain complex in degrees up to 3, which
serves as the right-hand side of the Kunneth comparison for inflations.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .exactlin import QQ, Field, kernel_matrix, rank, solve


@dataclass
class Report:
    passed: bool
    failures: list[str] = dc_field(default_factory=list)

    def __bool__(self):
        return self.passed


class StructureAlgebra:
    """Algebra with basis r_0..r_{n-1} and r_i r_j = sum_k c[i][j][k] r_k.

    ``idempotents`` is a complete list of primitive orthogonal idempotents
    (coordinate vectors); it is used by the bimodule category to choose its
    generating projective bimodules.  It defaults to the unit alone, which is
    right for local algebras.
    """

    def __init__(self, field: Field, structure_constants, unit_coords: Sequence, basis_labels: Sequence[str] | None = None,
                 idempotents: Sequence[Sequence] | None = None, name: str = ""):
        self.field = field
        n = len(structure_constants)
        self.dim = n
        self.c = [[[field(structure_constants[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]
        self.unit_coords = [field(x) for x in unit_coords]
        self.basis_labels = list(basis_labels) if basis_labels is not None else [f"r{i}" for i in range(n)]
        if idempotents is None:
            idempotents = [self.unit_coords]
        self.idempotents = [[field(x) for x in e] for e in idempotents]
        self.name = name

    def __repr__(self):
        return f"StructureAlgebra({self.name or self.dim}, {self.field!r})"

    # coordinates
    def basis_vector(self, i: int) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def mul(self, u: Sequence, v: Sequence) -> list:
        n = self.dim
        out = [self.field.zero] * n
        for i in range(n):
            if u[i] == 0:
                continue
            for j in range(n):
                if v[j] == 0:
                    continue
                x = u[i] * v[j]
                cij = self.c[i][j]
                for k in range(n):
                    if cij[k] != 0:
                        out[k] += x * cij[k]
        return out

    def left_matrix(self, u: Sequence):
        """Matrix of v -> u v."""
        cols = [self.mul(u, self.basis_vector(j)) for j in range(self.dim)]
        return self.field.from_columns(cols, self.dim)

    def right_matrix(self, u: Sequence):
        """Matrix of v -> v u."""
        cols = [self.mul(self.basis_vector(j), u) for j in range(self.dim)]
        return self.field.from_columns(cols, self.dim)

    def center_basis(self) -> list[list]:
        """Basis of the centre, solved from [r_i, z] = 0."""
        blocks = []
        for i in range(self.dim):
            e = self.basis_vector(i)
            blocks.append(self.right_matrix(e) - self.left_matrix(e))
        n = self.dim
        m = self.field.matrix(n * n, n)
        for b, blk in enumerate(blocks):
            for r in range(n):
                for c in range(n):
                    m[b * n + r, c] = blk[r, c]
        k = kernel_matrix(m)
        return [[k[i, j] for i in range(n)] for j in range(k.ncols())]

    def to_json(self) -> dict:
        f = self.field.format
        return {
            "dim": self.dim,
            "basis_labels": list(self.basis_labels),
            "structure_constants": [[[f(x) for x in row] for row in plane] for plane in self.c],
            "unit_coords": [f(x) for x in self.unit_coords],
            "idempotents": [[f(x) for x in e] for e in self.idempotents],
            "name": self.name,
        }

    @classmethod
    def from_json(cls, data: dict, field: Field) -> "StructureAlgebra":
        return cls(field, data["structure_constants"], data["unit_coords"], data.get("basis_labels"),
                   data.get("idempotents"), data.get("name", ""))


def check_algebra(r: StructureAlgebra) -> Report:
    n, c = r.dim, r.c
    failures = []
    for i, j, k, l in itertools.product(range(n), repeat=4):
        lhs = sum((c[i][j][m] * c[m][k][l] for m in range(n)), r.field.zero)
        rhs = sum((c[j][k][m] * c[i][m][l] for m in range(n)), r.field.zero)
        if lhs != rhs:
            failures.append(f"associativity fails at (i,j,k,l)={(i, j, k, l)}")
            break
    u = r.unit_coords
    for i in range(n):
        e = r.basis_vector(i)
        if r.mul(u, e) != e:
            failures.append(f"left unit fails at basis element {i}")
        if r.mul(e, u) != e:
            failures.append(f"right unit fails at basis element {i}")
    return Report(not failures, failures)


# ---------------------------------------------------------------- constructors


def dual_numbers(field: Field = QQ) -> StructureAlgebra:
    """k[x]/(x^2) with basis (1, x)."""
    c = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return StructureAlgebra(field, c, [1, 0], ["1", "x"], name="dual_numbers")


def matrix_algebra(n: int, field: Field = QQ) -> StructureAlgebra:
    """Mat_n(k) with matrix units e_ij ordered so that basis element 0 is
    the identity; the remaining elements are e_ij for (i,j) != (0,0) and
    e_00 is replaced by the identity."""
    if n < 1:
        raise ValueError("n must be positive")
    units = [(i, j) for i in range(n) for j in range(n)]
    dim = n * n

    def unit_vec(i, j):
        # e_ij in the basis (1, e_01, ..., e_{n-1,n-1}) where 1 = sum e_kk
        v = [0] * dim
        if (i, j) == (0, 0):
            v[0] = 1
            for k in range(1, n):
                v[units.index((k, k))] -= 1
        else:
            v[units.index((i, j))] = 1
        return v

    # products in the matrix unit basis, then change basis
    # basis element t is: t = 0 -> identity, else e_{units[t]}
    def basis_as_units(t):
        if t == 0:
            return {(k, k): 1 for k in range(n)}
        return {units[t]: 1}

    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            prod: dict = {}
            for (i, j), x in basis_as_units(a).items():
                for (k, l), y in basis_as_units(b).items():
                    if j == k:
                        prod[(i, l)] = prod.get((i, l), 0) + x * y
            vec = [0] * dim
            for (i, l), x in prod.items():
                for t, y in enumerate(unit_vec(i, l)):
                    vec[t] += x * y
            c[a][b] = vec
    labels = ["1"] + [f"e{i}{j}" for (i, j) in units[1:]]
    idem = [unit_vec(k, k) for k in range(n)]
    return StructureAlgebra(field, c, [1] + [0] * (dim - 1), labels, idempotents=idem, name=f"matrix_algebra({n})")


class Group:
    """Finite group given by a multiplication table on 0..n-1."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None, name: str = ""):
        n = len(table)
        self.table = [list(map(int, row)) for row in table]
        if any(len(row) != n for row in self.table):
            raise ValueError("group table is not square")
        for row in self.table:
            if sorted(row) != list(range(n)):
                raise ValueError("group table is not a Latin square")
        for j in range(n):
            if sorted(self.table[i][j] for i in range(n)) != list(range(n)):
                raise ValueError("group table is not a Latin square")
        ident = [e for e in range(n) if all(self.table[e][g] == g and self.table[g][e] == g for g in range(n))]
        if not ident:
            raise ValueError("group table has no identity")
        self.identity = ident[0]
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValueError("group table is not associative")
        self.order = n
        self.labels = list(labels) if labels is not None else [f"g{i}" for i in range(n)]
        self.name = name

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return next(b for b in range(self.order) if self.table[a][b] == self.identity)


def cyclic_group(n: int) -> Group:
    """C_n with elements 0..n-1 standing for g^0..g^{n-1}."""
    if n < 1:
        raise ValueError("n must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return Group(table, [f"g^{a}" for a in range(n)], name=f"C{n}")


def group_algebra(group: Group, field: Field = QQ) -> StructureAlgebra:
    n = group.order
    c = [[[1 if group.mul(a, b) == k else 0 for k in range(n)] for b in range(n)] for a in range(n)]
    unit = [1 if g == group.identity else 0 for g in range(n)]
    if group.identity != 0:
        raise ValueError("the identity must be element 0")
    return StructureAlgebra(field, c, unit, list(group.labels), name=f"group_algebra({group.name or n})")


def scalar_algebra(field: Field = QQ) -> StructureAlgebra:
    """The ground field as a 1-dimensional algebra."""
    return StructureAlgebra(field, [[[1]]], [1], ["1"], name="k")


# ---------------------------------------------------------------- classical HH


def _tuples(n: int, k: int):
    return list(itertools.product(range(n), repeat=k))


def classical_differential(r: StructureAlgebra, k: int):
    """Matrix of the Hochschild differential Hom(R^{(x)k}, R) -> Hom(R^{(x)k+1}, R).

    A k-cochain is stored as the coordinate vector of (f(r_I))_I, indexed by
    the tuple I followed by the output coordinate.
    """
    n, c, F = r.dim, r.c, r.field
    src = _tuples(n, k)
    tgt = _tuples(n, k + 1)
    sidx = {t: i for i, t in enumerate(src)}
    m = F.matrix(len(tgt) * n, len(src) * n)

    def col(I, out):
        return sidx[I] * n + out

    for ti, J in enumerate(tgt):
        row0 = ti * n
        # a_1 f(a_2..a_{k+1})
        for q in range(n):
            # coefficient of f(J[1:])_q in output l: c[J0][q][l]
            for l in range(n):
                x = c[J[0]][q][l]
                if x != 0:
                    m[row0 + l, col(J[1:], q)] += x
        # sum (-1)^i f(.., a_i a_{i+1}, ..)
        for i in range(k):
            sign = -1 if (i + 1) % 2 else 1
            for s in range(n):
                x = c[J[i]][J[i + 1]][s]
                if x == 0:
                    continue
                I = J[:i] + (s,) + J[i + 2:]
                for l in range(n):
                    m[row0 + l, col(I, l)] += sign * x
        # (-1)^{k+1} f(a_1..a_k) a_{k+1}
        sign = -1 if (k + 1) % 2 else 1
        for q in range(n):
            for l in range(n):
                x = c[q][J[k]][l]
                if x != 0:
                    m[row0 + l, col(J[:k], q)] += sign * x
    return m


def classical_hh_dim(r: StructureAlgebra, n: int) -> int:
    if n < 0 or n > 3:
        raise ValueError("classical Hochschild cohomology is computed for degrees 0..3 only")
    d = r.dim
    cn = d ** (n + 1)
    rk_out = rank(classical_differential(r, n))
    rk_in = rank(classical_differential(r, n - 1)) if n > 0 else 0
    return cn - rk_out - rk_in


def separability_idempotent(r: StructureAlgebra):
    """Solve for e in R (x) R with m(e) = 1 and (a (x) 1) e = e (1 (x) a).

    Returns coordinates of e (indexed by pairs) or None.
    """
    n, c, F = r.dim, r.c, r.field
    unknowns = n * n
    rows = []
    rhs = []
    # (r_a (x) 1) e - e (1 (x) r_a) = 0
    for a in range(n):
        for p in range(n):
            for q in range(n):
                row = [F.zero] * unknowns
                for i in range(n):
                    for j in range(n):
                        # e_{ij} r_i (x) r_j
                        x = c[a][i][p] if j == q else 0
                        y = c[j][a][q] if i == p else 0
                        if x != y:
                            row[i * n + j] += F(x) - F(y)
                rows.append(row)
                rhs.append(F.zero)
    for l in range(n):
        row = [F.zero] * unknowns
        for i in range(n):
            for j in range(n):
                row[i * n + j] += c[i][j][l]
        rows.append(row)
        rhs.append(r.unit_coords[l])
    sol = solve(F.from_rows(rows, unknowns), rhs)
    return sol

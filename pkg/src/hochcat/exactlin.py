"""Exact scalars and linear algebra over Q and F_p.

Matrices are python-flint ``fmpq_mat`` / ``nmod_mat`` values.  Scalars are
``fmpq`` / ``nmod``.  A :class:`Field` object creates both and knows how to
print and parse them.  Besides the dense routines (rank, kernel, solve,
quotient) there is a small sparse echelon used for the large, very sparse
condition systems that arise from hom spaces of tensor powers.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Sequence

import flint


class Field:
    characteristic: int = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def matrix(self, nrows: int, ncols: int, entries=None):
        raise NotImplementedError

    def zeros(self, nrows: int, ncols: int):
        return self.matrix(nrows, ncols)

    def identity(self, n: int):
        m = self.matrix(n, n)
        for i in range(n):
            m[i, i] = 1
        return m

    def from_rows(self, rows: Sequence[Sequence], ncols: int | None = None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        flat = [self(x) for r in rows for x in r]
        return self.matrix(len(rows), ncols, flat)

    def from_columns(self, cols: Sequence[Sequence], nrows: int):
        m = self.matrix(nrows, len(cols))
        for j, c in enumerate(cols):
            for i, x in enumerate(c):
                if x != 0:
                    m[i, j] = x
        return m

    def format(self, x) -> str:
        raise NotImplementedError

    def random_element(self, rng, small: bool = True):
        if self.characteristic:
            return self(rng.randrange(self.characteristic))
        return self(rng.randint(-3, 3))

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("field", self.characteristic))


class Rationals(Field):
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, flint.fmpq):
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            return flint.fmpq(x.numerator, x.denominator)
        if isinstance(x, flint.nmod):
            raise TypeError("cannot coerce a residue class into Q")
        return flint.fmpq(x)

    def matrix(self, nrows, ncols, entries=None):
        if entries is None:
            return flint.fmpq_mat(nrows, ncols)
        return flint.fmpq_mat(nrows, ncols, [self(x) for x in entries])

    def format(self, x) -> str:
        x = self(x)
        if x.q == 1:
            return str(x.p)
        return f"{x.p}/{x.q}"

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        p = int(p)
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p

    def __call__(self, x):
        p = self.characteristic
        if isinstance(x, flint.nmod):
            if x.modulus() != p:
                raise TypeError("residue class from a different prime field")
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, flint.fmpq):
            x = Fraction(int(x.p), int(x.q))
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
            return flint.nmod(x.numerator, p) / flint.nmod(x.denominator, p)
        return flint.nmod(int(x), p)

    def matrix(self, nrows, ncols, entries=None):
        p = self.characteristic
        if entries is None:
            return flint.nmod_mat(nrows, ncols, p)
        return flint.nmod_mat(nrows, ncols, [int(self(x)) for x in entries], p)

    def format(self, x) -> str:
        return str(int(self(x)))

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = Rationals()
_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_for(characteristic: int) -> Field:
    return QQ if characteristic == 0 else GF(characteristic)


def field_of(m) -> Field:
    if isinstance(m, flint.nmod_mat):
        return GF(m.modulus())
    if isinstance(m, flint.nmod):
        return GF(m.modulus())
    return QQ


# ---------------------------------------------------------------- dense


def rank(m) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    return m.rank()


def rref(m):
    """Reduced row echelon form, rank and pivot columns."""
    if m.nrows() == 0 or m.ncols() == 0:
        return m, 0, []
    r, rk = m.rref()
    pivots = []
    col = 0
    ncols = m.ncols()
    for i in range(rk):
        while col < ncols and r[i, col] == 0:
            col += 1
        pivots.append(col)
        col += 1
    return r, rk, pivots


def kernel_matrix(m):
    """Matrix whose columns form a basis of the right null space of m."""
    field = field_of(m)
    n = m.ncols()
    r, rk, pivots = rref(m)
    free = [j for j in range(n) if j not in set(pivots)]
    k = field.matrix(n, len(free))
    for c, j in enumerate(free):
        k[j, c] = 1
        for i, pj in enumerate(pivots):
            x = r[i, j]
            if x != 0:
                k[pj, c] = -x
    return k


def kernel_basis(m) -> list[list]:
    k = kernel_matrix(m)
    return [[k[i, j] for i in range(k.nrows())] for j in range(k.ncols())]


def solve(m, b: Sequence):
    """A particular solution x of m x = b, or None when inconsistent."""
    field = field_of(m)
    if len(b) != m.nrows():
        raise ValueError("dimension mismatch in solve")
    n = m.ncols()
    aug = field.matrix(m.nrows(), n + 1)
    for i in range(m.nrows()):
        for j in range(n):
            aug[i, j] = m[i, j]
        aug[i, n] = field(b[i])
    r, rk, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [field.zero] * n
    for i, pj in enumerate(pivots):
        x[pj] = r[i, n]
    return x


class Quotient:
    """Linear projection of k^n onto k^n / span(subspace).

    Coordinates on the quotient are the non-pivot coordinates after reduction
    by the row echelon form of the subspace.
    """

    def __init__(self, field: Field, ambient_dim: int, subspace: Iterable[Sequence]):
        self.field = field
        self.ambient_dim = ambient_dim
        rows = [list(v) for v in subspace]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError("subspace vector of wrong length")
        if rows:
            r, rk, pivots = rref(field.from_rows(rows, ambient_dim))
        else:
            r, rk, pivots = field.matrix(0, ambient_dim), 0, []
        self._r = r
        self.pivots = pivots
        pivset = set(pivots)
        self.free = [j for j in range(ambient_dim) if j not in pivset]
        self.dim = len(self.free)
        self._pos = {j: c for c, j in enumerate(self.free)}

    def project(self, v: Sequence) -> list:
        v = [self.field(x) for x in v]
        for i, pj in enumerate(self.pivots):
            x = v[pj]
            if x != 0:
                for j in self.free:
                    y = self._r[i, j]
                    if y != 0:
                        v[j] -= x * y
        return [v[j] for j in self.free]

    def projection_matrix(self):
        q = self.field.matrix(self.dim, self.ambient_dim)
        for c, j in enumerate(self.free):
            q[c, j] = 1
        for i, pj in enumerate(self.pivots):
            for j in self.free:
                y = self._r[i, j]
                if y != 0:
                    q[self._pos[j], pj] = -y
        return q

    def lift(self, coords: Sequence) -> list:
        """Representative in the ambient space (supported on free coordinates)."""
        v = [self.field.zero] * self.ambient_dim
        for c, j in enumerate(self.free):
            v[j] = self.field(coords[c])
        return v


def quotient(ambient_dim: int, subspace: Sequence[Sequence], field: Field | None = None) -> Quotient:
    if field is None:
        field = QQ
        for v in subspace:
            for x in v:
                field = field_of(x) if isinstance(x, flint.nmod) else field
                break
            break
    return Quotient(field, ambient_dim, subspace)


def kron(a, b):
    field = field_of(a)
    ra, ca, rb, cb = a.nrows(), a.ncols(), b.nrows(), b.ncols()
    m = field.matrix(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            x = a[i, j]
            if x == 0:
                continue
            for k in range(rb):
                for l in range(cb):
                    y = b[k, l]
                    if y != 0:
                        m[i * rb + k, j * cb + l] = x * y
    return m


def is_zero(m) -> bool:
    return not bool(m)


def block_matrix(field: Field, rows: Sequence[Sequence], row_dims: Sequence[int], col_dims: Sequence[int]):
    """Assemble a matrix from a grid of blocks (None means zero)."""
    m = field.matrix(sum(row_dims), sum(col_dims))
    r0 = 0
    for bi, brow in enumerate(rows):
        c0 = 0
        for bj, blk in enumerate(brow):
            if blk is not None:
                for i in range(blk.nrows()):
                    for j in range(blk.ncols()):
                        x = blk[i, j]
                        if x != 0:
                            m[r0 + i, c0 + j] = x
            c0 += col_dims[bj]
        r0 += row_dims[bi]
    return m


def submatrix(m, rows: Sequence[int], cols: Sequence[int]):
    field = field_of(m)
    s = field.matrix(len(rows), len(cols))
    for a, i in enumerate(rows):
        for b, j in enumerate(cols):
            x = m[i, j]
            if x != 0:
                s[a, b] = x
    return s


def column(m, j: int) -> list:
    return [m[i, j] for i in range(m.nrows())]


# ---------------------------------------------------------------- sparse

SparseVec = dict  # key -> nonzero scalar


def sparse_axpy(y: dict, a, x: dict) -> None:
    """y += a * x in place, dropping zeros."""
    for k, v in x.items():
        w = y.get(k)
        if w is None:
            y[k] = a * v
        else:
            w = w + a * v
            if w == 0:
                del y[k]
            else:
                y[k] = w


class SparseEchelon:
    """Incremental echelon basis of sparse vectors.

    Stored vectors are normalised at their pivot key and contain no pivot of
    an earlier vector.  With ``track`` each stored vector remembers the
    combination of inserted vectors it came from, so that dependencies among
    the inserted vectors can be read off.
    """

    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.track = track
        self.rows: list[dict] = []
        self.keys: list = []
        self.combos: list[dict] = []
        self.pivot_of: dict = {}
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: dict, combo: dict | None):
        pivot_of = self.pivot_of
        heap = [pivot_of[k] for k in v if k in pivot_of]
        heapq.heapify(heap)
        last = -1
        while heap:
            idx = heapq.heappop(heap)
            if idx == last:
                continue
            last = idx
            x = v.get(self.keys[idx])
            if x is None:
                continue
            x = -x
            for k, r in self.rows[idx].items():
                w = v.get(k)
                if w is None:
                    v[k] = x * r
                    j = pivot_of.get(k)
                    if j is not None and j > idx:
                        heapq.heappush(heap, j)
                else:
                    w = w + x * r
                    if w == 0:
                        del v[k]
                    else:
                        v[k] = w
            if combo is not None:
                sparse_axpy(combo, x, self.combos[idx])
        return v, combo

    def reduce(self, v: dict) -> dict:
        return self._reduce({k: x for k, x in v.items() if x != 0}, None)[0]

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def _store(self, v: dict, combo: dict | None) -> None:
        # the smallest key keeps fill-in low on block structured systems
        try:
            key = min(v)
        except TypeError:
            key = next(iter(v))
        inv = 1 / v[key]
        self.rows.append({k: x * inv for k, x in v.items()})
        self.keys.append(key)
        self.combos.append({k: x * inv for k, x in combo.items()} if combo is not None else {})
        self.pivot_of[key] = len(self.rows) - 1

    def add_untracked(self, v: dict) -> bool:
        """Insert v without recording it in dependency combinations."""
        combo = {} if self.track else None
        v, combo = self._reduce({k: x for k, x in v.items() if x != 0}, combo)
        if not v:
            return False
        self._store(v, combo)
        return True

    def add(self, v: dict, label=None):
        """Insert v.  Returns (True, None) if it was independent, otherwise
        (False, relation): with tracking, relation is a combination of
        inserted labels summing to zero."""
        if label is None:
            label = self.count
        self.count += 1
        combo = {label: self.field.one} if self.track else None
        v, combo = self._reduce({k: x for k, x in v.items() if x != 0}, combo)
        if not v:
            return False, combo
        self._store(v, combo)
        return True, None


def sparse_relations(columns: Sequence[dict], field: Field) -> list[dict]:
    """Basis of {c : sum_k c_k columns[k] = 0}, as dicts index -> scalar."""
    ech = SparseEchelon(field, track=True)
    rels = []
    for col in columns:
        ok, rel = ech.add(col)
        if not ok:
            rels.append(rel)
    return rels


def sparse_rank(vectors: Iterable[dict], field: Field) -> int:
    ech = SparseEchelon(field)
    for v in vectors:
        ech.add(v)
    return ech.rank


def dense_to_sparse(v: Sequence) -> dict:
    return {i: x for i, x in enumerate(v) if x != 0}


def sparse_to_dense(v: dict, n: int, field: Field) -> list:
    out = [field.zero] * n
    for i, x in v.items():
        out[i] = x
    return out

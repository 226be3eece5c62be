"""Concrete finitary monoidal categories.

Two backends share one interface:

* :class:`BimoduleCategory` -- projective B-B-bimodules plus the regular
  bimodule, with End(1) cut down to a central subalgebra X.
* :class:`GradedCategory` -- G-graded vector spaces (untwisted).

Every object is a finite direct sum of *generators* (the regular bimodule and
the bimodules B e_i (x) e_j B, resp. the simple objects F_g).  A morphism is
stored block-sparsely: one small concrete matrix per pair of summands.
Tensor products of generators are decomposed once, with explicit
isomorphisms, and tensor products of objects list their summands in a
canonical order determined by the tensor word of each summand.  That order
does not depend on bracketing, so (X Y) Z and X (Y Z) are literally the same
object and associativity holds on the nose.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .exactlin import QQ, Field, Quotient, field_of, kernel_matrix, kron, rank, rref
from .findim_algebra import Group, StructureAlgebra


# ---------------------------------------------------------------- concrete bimodules


class ConcreteBimodule:
    """A B-bimodule given by matrices of v -> b v and v -> v b for each basis element b."""

    def __init__(self, algebra: StructureAlgebra, dim: int, left: Sequence, right: Sequence):
        self.algebra = algebra
        self.dim = dim
        self.left = list(left)
        self.right = list(right)

    def check(self) -> list[str]:
        B = self.algebra
        F = B.field
        n = B.dim
        problems = []
        unit = self._action(self.left, B.unit_coords)
        if unit != F.identity(self.dim):
            problems.append("left action is not unital")
        unit = self._action(self.right, B.unit_coords)
        if unit != F.identity(self.dim):
            problems.append("right action is not unital")
        for i in range(n):
            for j in range(n):
                prod = B.mul(B.basis_vector(i), B.basis_vector(j))
                if self.left[i] * self.left[j] != self._action(self.left, prod):
                    problems.append(f"left action not multiplicative at {(i, j)}")
                if self.right[j] * self.right[i] != self._action(self.right, prod):
                    problems.append(f"right action not multiplicative at {(i, j)}")
                if self.left[i] * self.right[j] != self.right[j] * self.left[i]:
                    problems.append(f"actions do not commute at {(i, j)}")
        return problems

    def _action(self, mats, coords):
        F = self.algebra.field
        out = F.matrix(self.dim, self.dim)
        for m, x in zip(mats, coords):
            if x != 0:
                out += m * x
        return out

    def left_by(self, coords):
        return self._action(self.left, coords)

    def right_by(self, coords):
        return self._action(self.right, coords)


def regular_bimodule(B: StructureAlgebra) -> ConcreteBimodule:
    n = B.dim
    left = [B.left_matrix(B.basis_vector(i)) for i in range(n)]
    right = [B.right_matrix(B.basis_vector(i)) for i in range(n)]
    return ConcreteBimodule(B, n, left, right)


class _Subspace:
    """Column space of a matrix with a left inverse on it."""

    def __init__(self, m):
        F = field_of(m)
        r, rk, pivots = rref(m)
        cols = pivots
        self.basis = F.matrix(m.nrows(), rk)
        for c, j in enumerate(cols):
            for i in range(m.nrows()):
                self.basis[i, c] = m[i, j]
        t, _, rows = rref(self.basis.transpose())
        self.rows = rows
        sub = F.matrix(rk, rk)
        for a, i in enumerate(rows):
            for b in range(rk):
                sub[a, b] = self.basis[i, b]
        self.inv = sub.inv() if rk else sub
        self.dim = rk

    def coords(self, v):
        """Coordinates (as a column matrix) of a column matrix v in the span."""
        F = field_of(v)
        w = F.matrix(self.dim, v.ncols())
        for a, i in enumerate(self.rows):
            for c in range(v.ncols()):
                w[a, c] = v[i, c]
        return self.inv * w


def _restrict(sub: _Subspace, mat):
    """Matrix of the restriction of mat to an invariant subspace."""
    return sub.coords(mat * sub.basis)


def projective_bimodule(B: StructureAlgebra, e: Sequence, f: Sequence) -> ConcreteBimodule:
    """B e (x)_k f B."""
    left_sub = _Subspace(B.right_matrix(e))  # B e
    right_sub = _Subspace(B.left_matrix(f))  # f B
    n = B.dim
    F = B.field
    Il = F.identity(left_sub.dim)
    Ir = F.identity(right_sub.dim)
    left, right = [], []
    for i in range(n):
        b = B.basis_vector(i)
        left.append(kron(_restrict(left_sub, B.left_matrix(b)), Ir))
        right.append(kron(Il, _restrict(right_sub, B.right_matrix(b))))
    M = ConcreteBimodule(B, left_sub.dim * right_sub.dim, left, right)
    M.left_sub, M.right_sub = left_sub, right_sub
    return M


def bimodule_hom_basis(M: ConcreteBimodule, N: ConcreteBimodule) -> list:
    """Basis of bimodule maps M -> N (solved as a linear system)."""
    B = M.algebra
    F = B.field
    dm, dn = M.dim, N.dim
    nvar = dm * dn
    eqs = []
    for i in range(B.dim):
        for Am, An in ((M.left[i], N.left[i]), (M.right[i], N.right[i])):
            # phi Am - An phi = 0, phi[r, c] at index r*dm + c
            for r in range(dn):
                for c in range(dm):
                    row = {}
                    for s in range(dm):
                        x = Am[s, c]
                        if x != 0:
                            row[r * dm + s] = row.get(r * dm + s, 0) + x
                    for s in range(dn):
                        x = An[r, s]
                        if x != 0:
                            row[s * dm + c] = row.get(s * dm + c, 0) - x
                    if any(v != 0 for v in row.values()):
                        eqs.append(row)
    m = F.matrix(len(eqs), nvar)
    for a, row in enumerate(eqs):
        for j, x in row.items():
            m[a, j] = x
    k = kernel_matrix(m) if eqs else F.identity(nvar)
    out = []
    for c in range(k.ncols()):
        phi = F.matrix(dn, dm)
        for r in range(dn):
            for s in range(dm):
                phi[r, s] = k[r * dm + s, c]
        out.append(phi)
    return out


def balanced_tensor(M: ConcreteBimodule, N: ConcreteBimodule):
    """M (x)_B N as the cokernel of m b (x) n - m (x) b n inside M (x)_k N.

    Returns (T, q) with q the quotient map M (x)_k N -> T as a matrix.
    """
    B = M.algebra
    F = B.field
    dm, dn = M.dim, N.dim
    rels = []
    Im, In = F.identity(dm), F.identity(dn)
    for i in range(B.dim):
        rel = kron(M.right[i], In) - kron(Im, N.left[i])
        for c in range(rel.ncols()):
            v = [rel[r, c] for r in range(rel.nrows())]
            if any(x != 0 for x in v):
                rels.append(v)
    Q = Quotient(F, dm * dn, rels)
    q = Q.projection_matrix()
    lift = F.matrix(dm * dn, Q.dim)
    for c, j in enumerate(Q.free):
        lift[j, c] = 1
    left = [q * kron(M.left[i], In) * lift for i in range(B.dim)]
    right = [q * kron(Im, N.right[i]) * lift for i in range(B.dim)]
    return ConcreteBimodule(B, Q.dim, left, right), q


def _coord_solver(mats: list, rows: int, cols: int, field: Field):
    """Left inverse for coordinates with respect to a list of independent matrices."""
    k = len(mats)
    if k == 0:
        return None
    big = field.matrix(rows * cols, k)
    for c, m in enumerate(mats):
        for r in range(rows):
            for s in range(cols):
                x = m[r, s]
                if x != 0:
                    big[r * cols + s, c] = x
    _, rk, piv = rref(big.transpose())
    if rk != k:
        raise ValueError("hom basis is not linearly independent")
    sub = field.matrix(k, k)
    for a, i in enumerate(piv):
        for b in range(k):
            sub[a, b] = big[i, b]
    return [(i // cols, i % cols) for i in piv], sub.inv()


# ---------------------------------------------------------------- categories


class BackendCategory:
    """Generator-level data of a strict monoidal category.

    Subclasses provide: ``gens`` (labels), ``unit``, ``gen_dim``,
    ``gen_tensor``, ``_gen_hom_basis`` and ``_gen_tensor_mor``.
    """

    kind = "abstract"

    def __init__(self, field: Field):
        self.field = field
        self._hom_cache: dict = {}
        self._coord_cache: dict = {}
        self._tensor_cache: dict = {}
        self._tmor_cache: dict = {}
        self._homspace_cache: dict = {}

    # generator level ------------------------------------------------
    def is_unit(self, g: int) -> bool:
        return g == self.unit

    def gen_hom_basis(self, g: int, h: int) -> list:
        key = (g, h)
        if key not in self._hom_cache:
            self._hom_cache[key] = self._gen_hom_basis(g, h)
        return self._hom_cache[key]

    def gen_coords(self, g: int, h: int, m) -> list:
        key = (g, h)
        if key not in self._coord_cache:
            basis = self.gen_hom_basis(g, h)
            self._coord_cache[key] = _coord_solver(basis, self.gen_dim(h), self.gen_dim(g), self.field)
        data = self._coord_cache[key]
        if data is None:
            return []
        pos, inv = data
        v = self.field.matrix(len(pos), 1)
        for a, (r, s) in enumerate(pos):
            v[a, 0] = m[r, s]
        w = inv * v
        return [w[i, 0] for i in range(w.nrows())]

    def gen_tensor_mor(self, g, g2, h, h2, alpha, beta) -> dict:
        """alpha (x) beta for alpha: g -> g2, beta: h -> h2, as blocks between
        the summands of g h and g2 h2 (indexed by position in gen_tensor)."""
        key = (g, g2, h, h2, tuple(alpha.entries()), tuple(beta.entries()))
        out = self._tmor_cache.get(key)
        if out is None:
            out = self._gen_tensor_mor(g, g2, h, h2, alpha, beta)
            self._tmor_cache[key] = out
        return out

    # object level ---------------------------------------------------
    def unit_object(self) -> "CObject":
        return CObject(self, (self.unit,))

    def obj(self, *gens) -> "CObject":
        labels = {lab: i for i, lab in enumerate(self.gens)}
        return CObject(self, tuple(labels[g] if isinstance(g, str) else g for g in gens))

    def zero_object(self) -> "CObject":
        return CObject(self, ())

    def gen_object(self, g: int) -> "CObject":
        return CObject(self, (g,))

    def hom(self, x: "CObject", y: "CObject") -> "HomSpace":
        if x.cat is not self or y.cat is not self:
            raise ValueError("backend mismatch")
        key = (x.summands, y.summands)
        hs = self._homspace_cache.get(key)
        if hs is None:
            hs = HomSpace(x, y)
            self._homspace_cache[key] = hs
        return hs

    def label(self, g: int) -> str:
        return self.gens[g]


class BimoduleCategory(BackendCategory):
    """C_{B,X}: add of the regular bimodule and B e_i (x) e_j B, End(1) = X."""

    kind = "bimodule"

    def __init__(self, algebra: StructureAlgebra, center_sub: Sequence[Sequence] | None = None):
        super().__init__(algebra.field)
        B = self.algebra = algebra
        F = self.field
        self.idempotents = algebra.idempotents
        r = len(self.idempotents)
        self.gens = ["1"]
        self.pairs = [None]
        self.concrete = [regular_bimodule(B)]
        for i in range(r):
            for j in range(r):
                self.gens.append("F" if r == 1 else f"F{i}{j}")
                self.pairs.append((i, j))
                self.concrete.append(projective_bimodule(B, self.idempotents[i], self.idempotents[j]))
        self.unit = 0
        # e_j B e_k bases
        self._corner = {}
        for j in range(r):
            for k in range(r):
                m = B.left_matrix(self.idempotents[j]) * B.right_matrix(self.idempotents[k])
                self._corner[(j, k)] = _Subspace(m) if rank(m) else None
        centre = B.center_basis()
        if center_sub is None:
            center_sub = centre
        self.center_sub = [[F(x) for x in z] for z in center_sub]
        self._check_center_sub(centre)
        self._phi = {}

    def _check_center_sub(self, centre):
        B, F = self.algebra, self.field
        X = self.center_sub
        n = B.dim
        cmat = F.from_columns(centre, n) if centre else F.matrix(n, 0)
        xmat = F.from_columns(X, n) if X else F.matrix(n, 0)
        if rank(xmat) != len(X):
            raise ValueError("center_sub vectors are linearly dependent")
        both = F.from_columns(list(centre) + list(X), n)
        if rank(both) != rank(cmat):
            raise ValueError("center_sub is not contained in the centre of B")
        def in_x(v):
            return rank(F.from_columns(list(X) + [v], n)) == len(X)
        if not in_x(B.unit_coords):
            raise ValueError("center_sub does not contain the unit")
        for a in X:
            for b in X:
                if not in_x(B.mul(a, b)):
                    raise ValueError("center_sub is not closed under multiplication")
        # elements of End(1) factoring through projective bimodules
        reg = self.concrete[0]
        for g in range(1, len(self.gens)):
            ins = bimodule_hom_basis(reg, self.concrete[g])
            outs = bimodule_hom_basis(self.concrete[g], reg)
            for s in ins:
                for t in outs:
                    z = t * s
                    # a bimodule endomorphism of B is multiplication by its value at 1
                    v = [sum((z[i, j] * B.unit_coords[j] for j in range(n)), F.zero) for i in range(n)]
                    if not in_x(v):
                        raise ValueError("center_sub misses central elements factoring through B (x) B")

    def gen_dim(self, g: int) -> int:
        return self.concrete[g].dim

    def gen_tensor(self, g: int, h: int) -> list:
        if g == 0:
            return [(None, h)]
        if h == 0:
            return [(None, g)]
        (i, j), (k, l) = self.pairs[g], self.pairs[h]
        corner = self._corner[(j, k)]
        out_gen = self.pairs.index((i, l))
        return [(m, out_gen) for m in range(corner.dim if corner else 0)]

    def _gen_hom_basis(self, g, h):
        if g == 0 and h == 0:
            return [self.algebra.left_matrix(z) for z in self.center_sub]
        return bimodule_hom_basis(self.concrete[g], self.concrete[h])

    def _phi_data(self, g: int, h: int):
        """Quotient map of the balanced tensor and the lifted summand inclusions."""
        key = (g, h)
        if key in self._phi:
            return self._phi[key]
        B, F = self.algebra, self.field
        V, W = self.concrete[g], self.concrete[h]
        T, q = balanced_tensor(V, W)
        dv, dw = V.dim, W.dim
        pieces = []
        if g == 0:
            # w -> 1 (x) w
            u = B.unit_coords
            for _, t in self.gen_tensor(g, h):
                lift = F.matrix(dv * dw, dw)
                for s in range(dv):
                    if u[s] != 0:
                        for c in range(dw):
                            lift[s * dw + c, c] = u[s]
                pieces.append(lift)
        elif h == 0:
            u = B.unit_coords
            lift = F.matrix(dv * dw, dv)
            for a in range(dv):
                for s in range(dw):
                    if u[s] != 0:
                        lift[a * dw + s, a] = u[s]
            pieces.append(lift)
        else:
            (i, j), (k, l) = self.pairs[g], self.pairs[h]
            corner = self._corner[(j, k)]
            rsub_j = V.right_sub
            lsub_k = W.left_sub
            di, dj = V.left_sub.dim, rsub_j.dim
            dk, dl = lsub_k.dim, W.right_sub.dim
            ek = F.matrix(B.dim, 1)
            for s in range(B.dim):
                ek[s, 0] = self.idempotents[k][s]
            ecoord = lsub_k.coords(ek)
            for m in range(corner.dim):
                z = F.matrix(B.dim, 1)
                for s in range(B.dim):
                    z[s, 0] = corner.basis[s, m]
                zcoord = rsub_j.coords(z)
                target = self.concrete[self.pairs.index((i, l))]
                lift = F.matrix(dv * dw, target.dim)
                for a in range(di):
                    for c in range(dl):
                        col = a * dl + c
                        for beta in range(dj):
                            zb = zcoord[beta, 0]
                            if zb == 0:
                                continue
                            for gamma in range(dk):
                                eg = ecoord[gamma, 0]
                                if eg == 0:
                                    continue
                                row = (a * dj + beta) * dw + (gamma * dl + c)
                                lift[row, col] += zb * eg
                pieces.append(lift)
        dims = [p.ncols() for p in pieces]
        total = sum(dims)
        if total != T.dim:
            raise ArithmeticError(f"tensor decomposition of {self.gens[g]} {self.gens[h]} has wrong dimension")
        phi = F.matrix(T.dim, total)
        off = 0
        for p in pieces:
            qp = q * p
            for r_ in range(T.dim):
                for c in range(p.ncols()):
                    phi[r_, off + c] = qp[r_, c]
            off += p.ncols()
        if total and rank(phi) != total:
            raise ArithmeticError("summand inclusions of a tensor product are not an isomorphism")
        offsets = [sum(dims[:a]) for a in range(len(dims))]
        data = (q, pieces, phi.inv() if total else phi, dims, offsets)
        self._phi[key] = data
        return data

    def _gen_tensor_mor(self, g, g2, h, h2, alpha, beta):
        F = self.field
        q1, lifts, _, dims1, _ = self._phi_data(g, h)
        q2, _, phinv2, dims2, off2 = self._phi_data(g2, h2)
        ab = kron(alpha, beta)
        out = {}
        for m, lift in enumerate(lifts):
            img = phinv2 * (q2 * (ab * lift))
            for m2, d2 in enumerate(dims2):
                blk = F.matrix(d2, dims1[m])
                nz = False
                for r_ in range(d2):
                    for c in range(dims1[m]):
                        x = img[off2[m2] + r_, c]
                        if x != 0:
                            blk[r_, c] = x
                            nz = True
                if nz:
                    out[(m2, m)] = blk
        return out

    def realize(self, x: "CObject") -> ConcreteBimodule:
        """The concrete bimodule underlying an object (block diagonal actions)."""
        B, F = self.algebra, self.field
        dims = [self.gen_dim(g) for g in x.summands]
        n = sum(dims)
        left, right = [], []
        for i in range(B.dim):
            L, R = F.matrix(n, n), F.matrix(n, n)
            off = 0
            for g, d in zip(x.summands, dims):
                Lg, Rg = self.concrete[g].left[i], self.concrete[g].right[i]
                for a in range(d):
                    for b in range(d):
                        L[off + a, off + b] = Lg[a, b]
                        R[off + a, off + b] = Rg[a, b]
                off += d
            left.append(L)
            right.append(R)
        return ConcreteBimodule(B, n, left, right)


class GradedCategory(BackendCategory):
    """Vec_G: generators F_g (one-dimensional), F_g F_h = F_{gh}."""

    kind = "graded"

    def __init__(self, group: Group, field: Field = QQ):
        super().__init__(field)
        self.group = group
        self.gens = [f"F[{lab}]" for lab in group.labels]
        self.unit = group.identity
        self._one = field.identity(1)

    def gen_dim(self, g: int) -> int:
        return 1

    def gen_tensor(self, g: int, h: int) -> list:
        return [(None, self.group.mul(g, h))]

    def _gen_hom_basis(self, g, h):
        return [self._one] if g == h else []

    def gen_coords(self, g, h, m):
        return [m[0, 0]] if g == h else []

    def gen_tensor_mor(self, g, g2, h, h2, alpha, beta):
        return {(0, 0): alpha * beta}

    def dimension_vector(self, x: "CObject") -> list[int]:
        dims = [0] * self.group.order
        for g in x.summands:
            dims[g] += 1
        return dims


# ---------------------------------------------------------------- objects and morphisms


def _factor_words(cat, summands):
    return tuple(((0, k, cat.is_unit(g)),) for k, g in enumerate(summands))


class CObject:
    """A direct sum of generators.

    ``words`` records the tensor word of each summand; it fixes the summand
    order of later tensor products and is not part of object identity.
    """

    __slots__ = ("cat", "summands", "words", "_hash")

    def __init__(self, cat: BackendCategory, summands, words=None):
        self.cat = cat
        self.summands = tuple(summands)
        self.words = words if words is not None else _factor_words(cat, self.summands)
        self._hash = hash(self.summands)

    def __eq__(self, other):
        return isinstance(other, CObject) and other.cat is self.cat and other.summands == self.summands

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.summands)

    def __repr__(self):
        if not self.summands:
            return "0"
        return " + ".join(self.cat.label(g) for g in self.summands)

    @property
    def dim(self) -> int:
        return sum(self.cat.gen_dim(g) for g in self.summands)

    def atomic(self) -> "CObject":
        return CObject(self.cat, self.summands)


class TensorData:
    """Where each summand of x (x) y comes from: positions[(i, j)][m]."""

    def __init__(self, positions: dict, origin: list):
        self.positions = positions
        self.origin = origin


def _insert_mid(word, mid):
    for pos, letter in enumerate(word):
        if letter[0] == 0 and not letter[2]:
            return word[:pos] + ((1, mid),) + word[pos:]
    return word + ((1, mid),)


def tensor_obj(x: CObject, y: CObject):
    cat = x.cat
    if y.cat is not cat:
        raise ValueError("backend mismatch")
    key = (x.summands, x.words, y.summands, y.words)
    hit = cat._tensor_cache.get(key)
    if hit is not None:
        return hit
    entries = []
    for i, (g, wx) in enumerate(zip(x.summands, x.words)):
        for j, (h, wy) in enumerate(zip(y.summands, y.words)):
            for m, (mid, k) in enumerate(cat.gen_tensor(g, h)):
                w = wx + (wy if mid is None else _insert_mid(wy, mid))
                entries.append((w, k, (i, j, m)))
    entries.sort(key=lambda e: e[0])
    obj = CObject(cat, [e[1] for e in entries], tuple(e[0] for e in entries))
    positions: dict = defaultdict(dict)
    origin = []
    for pos, (_, _, (i, j, m)) in enumerate(entries):
        positions[(i, j)][m] = pos
        origin.append((i, j, m))
    out = (obj, TensorData(dict(positions), origin))
    cat._tensor_cache[key] = out
    return out


def tensor(*objs: CObject) -> CObject:
    out = objs[0]
    for o in objs[1:]:
        out = tensor_obj(out, o)[0]
    return out


class CMorphism:
    """Block-sparse morphism: blocks[(j, i)] maps summand i of source to summand j of target."""

    __slots__ = ("source", "target", "blocks", "_by_tgt", "_by_src")

    def __init__(self, source: CObject, target: CObject, blocks: dict | None = None):
        self.source = source
        self.target = target
        self.blocks = {} if blocks is None else {k: v for k, v in blocks.items() if v}
        self._by_tgt = None
        self._by_src = None

    @property
    def cat(self):
        return self.source.cat

    @property
    def field(self):
        return self.source.cat.field

    def by_target(self):
        if self._by_tgt is None:
            d = defaultdict(list)
            for (j, i), b in self.blocks.items():
                d[j].append((i, b))
            self._by_tgt = d
        return self._by_tgt

    def by_source(self):
        if self._by_src is None:
            d = defaultdict(list)
            for (j, i), b in self.blocks.items():
                d[i].append((j, b))
            self._by_src = d
        return self._by_src

    def is_zero(self) -> bool:
        return not self.blocks

    def __repr__(self):
        return f"CMorphism({self.source!r} -> {self.target!r}, {len(self.blocks)} blocks)"

    def _check_same(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("morphisms have different endpoints")

    def __add__(self, other):
        self._check_same(other)
        out = dict(self.blocks)
        for k, b in other.blocks.items():
            out[k] = out[k] + b if k in out else b
        return CMorphism(self.source, self.target, out)

    def __neg__(self):
        return CMorphism(self.source, self.target, {k: -b for k, b in self.blocks.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        if c == 0:
            return CMorphism(self.source, self.target)
        return CMorphism(self.source, self.target, {k: b * c for k, b in self.blocks.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, CMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and (self - other).is_zero()

    __hash__ = None

    def flat(self) -> dict:
        """Sparse vector of all concrete matrix entries."""
        out = {}
        for (j, i), b in self.blocks.items():
            nr, nc = b.nrows(), b.ncols()
            for r in range(nr):
                for c in range(nc):
                    x = b[r, c]
                    if x != 0:
                        out[(j, i, r, c)] = x
        return out

    def to_matrix(self):
        """The full concrete matrix (target dim x source dim)."""
        cat = self.cat
        F = cat.field
        sd = [cat.gen_dim(g) for g in self.source.summands]
        td = [cat.gen_dim(g) for g in self.target.summands]
        so = [sum(sd[:k]) for k in range(len(sd))]
        to = [sum(td[:k]) for k in range(len(td))]
        m = F.matrix(sum(td), sum(sd))
        for (j, i), b in self.blocks.items():
            for r in range(b.nrows()):
                for c in range(b.ncols()):
                    x = b[r, c]
                    if x != 0:
                        m[to[j] + r, so[i] + c] = x
        return m


def compose(g: CMorphism, f: CMorphism) -> CMorphism:
    """g o f."""
    if f.target != g.source:
        raise ValueError(f"cannot compose: {f.target!r} != {g.source!r}")
    ftgt = f.by_target()
    out = {}
    for (k, j), gb in g.blocks.items():
        for i, fb in ftgt.get(j, ()):
            p = gb * fb
            key = (k, i)
            out[key] = out[key] + p if key in out else p
    return CMorphism(f.source, g.target, out)


def identity_mor(x: CObject) -> CMorphism:
    cat = x.cat
    return CMorphism(x, x, {(i, i): cat.field.identity(cat.gen_dim(g)) for i, g in enumerate(x.summands)})


def zero_mor(x: CObject, y: CObject) -> CMorphism:
    return CMorphism(x, y)


def tensor_mor(f: CMorphism, g: CMorphism) -> CMorphism:
    cat = f.cat
    if g.cat is not cat:
        raise ValueError("backend mismatch")
    src, sdata = tensor_obj(f.source, g.source)
    tgt, tdata = tensor_obj(f.target, g.target)
    X, X2, Y, Y2 = f.source.summands, f.target.summands, g.source.summands, g.target.summands
    out = {}
    spos, tpos = sdata.positions, tdata.positions
    for (i2, i), a in f.blocks.items():
        for (j2, j), b in g.blocks.items():
            blocks = cat.gen_tensor_mor(X[i], X2[i2], Y[j], Y2[j2], a, b)
            sp, tp = spos[(i, j)], tpos[(i2, j2)]
            for (m2, m), blk in blocks.items():
                out[(tp[m2], sp[m])] = blk
    return CMorphism(src, tgt, out)


def tensor_mors(*mors: CMorphism) -> CMorphism:
    out = mors[0]
    for m in mors[1:]:
        out = tensor_mor(out, m)
    return out


def direct_sum(objs: Sequence[CObject]):
    """(S, injections, projections) with sum j_k p_k = id and p_k j_l = delta id."""
    cat = objs[0].cat
    summands = []
    offsets = []
    for o in objs:
        offsets.append(len(summands))
        summands.extend(o.summands)
    S = CObject(cat, summands)
    inj, proj = [], []
    for o, off in zip(objs, offsets):
        blocks_i = {}
        blocks_p = {}
        for a, g in enumerate(o.summands):
            I = cat.field.identity(cat.gen_dim(g))
            blocks_i[(off + a, a)] = I
            blocks_p[(a, off + a)] = I
        inj.append(CMorphism(o, S, blocks_i))
        proj.append(CMorphism(S, o, blocks_p))
    return S, inj, proj


def column_mor(source_parts: Sequence[CMorphism], source: CObject) -> CMorphism:
    """The map from a direct sum (built by direct_sum) whose restrictions are the given maps."""
    target = source_parts[0].target
    out = {}
    off = 0
    for f in source_parts:
        if f.target != target:
            raise ValueError("column parts must share a target")
        for (j, i), b in f.blocks.items():
            out[(j, off + i)] = b
        off += len(f.source)
    return CMorphism(source, target, out)


class HomSpace:
    """Hom(x, y) with the basis of single-block morphisms (j, i, k)."""

    def __init__(self, x: CObject, y: CObject):
        self.source, self.target = x, y
        cat = x.cat
        self.cat = cat
        self.index = []
        for j, h in enumerate(y.summands):
            for i, g in enumerate(x.summands):
                for k in range(len(cat.gen_hom_basis(g, h))):
                    self.index.append((j, i, k))
        self.pos = {t: n for n, t in enumerate(self.index)}
        self.dim = len(self.index)

    def basis_element(self, n: int) -> CMorphism:
        j, i, k = self.index[n]
        cat = self.cat
        b = cat.gen_hom_basis(self.source.summands[i], self.target.summands[j])[k]
        return CMorphism(self.source, self.target, {(j, i): b})

    def basis(self) -> list[CMorphism]:
        return [self.basis_element(n) for n in range(self.dim)]

    def coords(self, f: CMorphism) -> list:
        F = self.cat.field
        v = [F.zero] * self.dim
        X, Y = self.source.summands, self.target.summands
        for (j, i), b in f.blocks.items():
            for k, x in enumerate(self.cat.gen_coords(X[i], Y[j], b)):
                if x != 0:
                    v[self.pos[(j, i, k)]] = x
        return v

    def sparse_coords(self, f: CMorphism) -> dict:
        out = {}
        X, Y = self.source.summands, self.target.summands
        for (j, i), b in f.blocks.items():
            for k, x in enumerate(self.cat.gen_coords(X[i], Y[j], b)):
                if x != 0:
                    out[self.pos[(j, i, k)]] = x
        return out

    def from_coords(self, c) -> CMorphism:
        cat = self.cat
        X, Y = self.source.summands, self.target.summands
        out = {}
        items = c.items() if isinstance(c, dict) else enumerate(c)
        for n, x in items:
            if x == 0:
                continue
            j, i, k = self.index[n]
            b = cat.gen_hom_basis(X[i], Y[j])[k] * x
            out[(j, i)] = out[(j, i)] + b if (j, i) in out else b
        return CMorphism(self.source, self.target, out)


def hom_basis(x: CObject, y: CObject) -> list[CMorphism]:
    return x.cat.hom(x, y).basis()


def unit_object(cat: BackendCategory) -> CObject:
    return cat.unit_object()

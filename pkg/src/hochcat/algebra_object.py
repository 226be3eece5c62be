"""Algebra objects in the Freyd category and their bimodules.

An algebra object A = (A1 -a-> A0) is stored by its components
mu0: A0 A0 -> A0, mu01: A0 A1 -> A1, mu10: A1 A0 -> A1 and a unit
representative iota0: 1 -> A0.  All axioms are checked as equalities of
homotopy classes.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import HochError
from .exactlin import Field, field_of, rank
from .findim_algebra import Group, Report, StructureAlgebra, check_algebra
from .freyd import (
    FreydMorphism,
    PresentedObject,
    affine_solution,
    constrained_subspace,
    embed,
    factor_through,
    freyd_tensor,
    quotient_representatives,
)
from .monoidal_backend import (
    BackendCategory,
    BimoduleCategory,
    CMorphism,
    CObject,
    GradedCategory,
    column_mor,
    compose,
    direct_sum,
    identity_mor,
    tensor_mor,
    tensor_mors,
    tensor_obj,
    zero_mor,
)


@dataclass
class AxiomReport(Report):
    checks: dict = dc_field(default_factory=dict)


def _report(checks: dict) -> AxiomReport:
    fails = [k for k, v in checks.items() if not v]
    return AxiomReport(not fails, fails, checks)


class AlgebraObject:
    def __init__(self, a_obj: PresentedObject, mu0: CMorphism, mu01: CMorphism | None = None,
                 mu10: CMorphism | None = None, iota0: CMorphism | None = None, name: str = ""):
        self.a_obj = a_obj
        A0, A1 = a_obj.x0, a_obj.x1
        cat = A0.cat
        self.mu0 = mu0
        self.mu01 = mu01 if mu01 is not None else zero_mor(tensor_obj(A0, A1)[0], A1)
        self.mu10 = mu10 if mu10 is not None else zero_mor(tensor_obj(A1, A0)[0], A1)
        self.iota0 = iota0
        self.name = name
        A00 = tensor_obj(A0, A0)[0]
        if mu0.source != A00 or mu0.target != A0:
            raise ValueError("mu0 must map A0 A0 -> A0")
        if self.mu01.source != tensor_obj(A0, A1)[0] or self.mu01.target != A1:
            raise ValueError("mu01 must map A0 A1 -> A1")
        if self.mu10.source != tensor_obj(A1, A0)[0] or self.mu10.target != A1:
            raise ValueError("mu10 must map A1 A0 -> A1")
        if iota0 is None or iota0.source != cat.unit_object() or iota0.target != A0:
            raise ValueError("iota0 must map 1 -> A0")
        self._mu = None

    @property
    def cat(self) -> BackendCategory:
        return self.a_obj.cat

    @property
    def field(self) -> Field:
        return self.cat.field

    @property
    def A0(self) -> CObject:
        return self.a_obj.x0

    @property
    def A1(self) -> CObject:
        return self.a_obj.x1

    @property
    def a(self) -> CMorphism:
        return self.a_obj.x

    def __repr__(self):
        return f"AlgebraObject({self.name or '?'}: {self.a_obj!r})"

    @property
    def AA(self) -> PresentedObject:
        return freyd_tensor(self.a_obj, self.a_obj)

    @property
    def mu(self) -> FreydMorphism:
        if self._mu is None:
            aa = self.AA
            f1 = column_mor([self.mu10, self.mu01], aa.x1)
            self._mu = FreydMorphism(aa, self.a_obj, self.mu0, f1)
        return self._mu

    @property
    def iota(self) -> FreydMorphism:
        return FreydMorphism(embed(self.cat.unit_object()), self.a_obj, self.iota0)

    def id0(self) -> CMorphism:
        return self.cached("id0", lambda: identity_mor(self.A0))

    def id1(self) -> CMorphism:
        return self.cached("id1", lambda: identity_mor(self.A1))

    def cached(self, key, build):
        """Memoised derived morphisms such as mu0 (x) 1."""
        c = self.__dict__.setdefault("_cache", {})
        if key not in c:
            c[key] = build()
        return c[key]

    def mu_left(self) -> CMorphism:
        """mu0 (x) 1: A0 A0 A0 -> A0 A0."""
        return self.cached("mu_left", lambda: tensor_mor(self.mu0, self.id0()))

    def mu_right(self) -> CMorphism:
        """1 (x) mu0: A0 A0 A0 -> A0 A0."""
        return self.cached("mu_right", lambda: tensor_mor(self.id0(), self.mu0))

    def a_left(self) -> CMorphism:
        """a (x) 1: A1 A0 -> A0 A0."""
        return self.cached("a_left", lambda: tensor_mor(self.a, self.id0()))

    def a_right(self) -> CMorphism:
        """1 (x) a: A0 A1 -> A0 A0."""
        return self.cached("a_right", lambda: tensor_mor(self.id0(), self.a))


@dataclass
class TwoCochain:
    g0: CMorphism
    g1: CMorphism


def _null(p: PresentedObject, f: CMorphism) -> bool:
    return p.is_null(f)


def check_axioms(alg: AlgebraObject) -> AxiomReport:
    """Square, associativity and both unit laws (as homotopy classes)."""
    A, mu0, i0 = alg.a_obj, alg.mu0, alg.iota0
    I0, I1 = alg.id0(), alg.id1()
    checks = {}
    checks["square"] = (compose(alg.a, alg.mu01) == compose(mu0, tensor_mor(I0, alg.a))
                        and compose(alg.a, alg.mu10) == compose(mu0, tensor_mor(alg.a, I0)))
    assoc = compose(mu0, tensor_mor(mu0, I0)) - compose(mu0, tensor_mor(I0, mu0))
    checks["associativity"] = _null(A, assoc)
    checks["left unitality"] = _null(A, compose(mu0, tensor_mor(i0, I0)) - I0)
    checks["right unitality"] = _null(A, compose(mu0, tensor_mor(I0, i0)) - I0)
    return _report(checks)


# ---------------------------------------------------------------- bimodules

class ABimodule:
    """A bimodule (M, rho: MA -> M, lam: AM -> M) over an algebra object."""

    def __init__(self, alg: AlgebraObject, m: PresentedObject, rho0: CMorphism, lam0: CMorphism,
                 free_on: CObject | None = None):
        self.alg, self.m = alg, m
        self.rho0, self.lam0 = rho0, lam0
        self.free_on = free_on

    @property
    def rho(self) -> FreydMorphism:
        return FreydMorphism(freyd_tensor(self.m, self.alg.a_obj), self.m, self.rho0)

    @property
    def lam(self) -> FreydMorphism:
        return FreydMorphism(freyd_tensor(self.alg.a_obj, self.m), self.m, self.lam0)

    def __repr__(self):
        return f"ABimodule({self.m!r})"


def regular_bimodule(alg: AlgebraObject) -> ABimodule:
    return ABimodule(alg, alg.a_obj, alg.mu0, alg.mu0)


def free_bimodule(alg: AlgebraObject, f: CObject) -> ABimodule:
    """A F A with the outer multiplications."""
    A = alg.a_obj
    m = freyd_tensor(freyd_tensor(A, embed(f)), A)
    a0f = tensor_obj(alg.A0, f)[0]
    fa0 = tensor_obj(f, alg.A0)[0]
    rho0 = tensor_mor(identity_mor(a0f), alg.mu0)
    lam0 = tensor_mor(alg.mu0, identity_mor(fa0))
    return ABimodule(alg, m, rho0, lam0, free_on=f)


def check_bimodule(M: ABimodule) -> AxiomReport:
    alg = M.alg
    I0 = alg.id0()
    Im = identity_mor(M.m.x0)
    rho0, lam0, mu0, i0 = M.rho0, M.lam0, alg.mu0, alg.iota0
    p = M.m
    checks = {
        "right action descends": M.rho.is_valid(),
        "left action descends": M.lam.is_valid(),
        "right associativity": _null(p, compose(rho0, tensor_mor(rho0, I0)) - compose(rho0, tensor_mor(Im, mu0))),
        "left associativity": _null(p, compose(lam0, tensor_mor(I0, lam0)) - compose(lam0, tensor_mor(mu0, Im))),
        "right unitality": _null(p, compose(rho0, tensor_mor(Im, i0)) - Im),
        "left unitality": _null(p, compose(lam0, tensor_mor(i0, Im)) - Im),
        "compatibility": _null(p, compose(rho0, tensor_mor(lam0, I0)) - compose(lam0, tensor_mor(I0, rho0))),
    }
    return _report(checks)


def bimodule_map_conditions(M: ABimodule, N: ABimodule, g0: CMorphism) -> list[CMorphism]:
    """The expressions that must be null in N for g0 to be a bimodule map."""
    I0 = M.alg.id0()
    return [
        compose(g0, M.rho0) - compose(N.rho0, tensor_mor(g0, I0)),
        compose(g0, M.lam0) - compose(N.lam0, tensor_mor(I0, g0)),
    ]


def is_bimodule_map(M: ABimodule, N: ABimodule, g0: CMorphism) -> bool:
    g = FreydMorphism(M.m, N.m, g0)
    return g.is_valid() and all(N.m.is_null(e) for e in bimodule_map_conditions(M, N, g0))


def bimodule_hom_basis(M: ABimodule, N: ABimodule) -> list[CMorphism]:
    """Representatives of a basis of bimodule maps M -> N."""
    cat = M.alg.cat
    F = cat.field
    hs = cat.hom(M.m.x0, N.m.x0)
    basis = hs.basis()
    images = []
    for g0 in basis:
        conds = [compose(g0, M.m.x)] + bimodule_map_conditions(M, N, g0)
        images.append(conds)
    allowed = [N.m.null_generators(M.m.x1)]
    allowed += [N.m.null_generators(e.source) for e in images[0][1:]] if images else []
    sols = constrained_subspace(F, images, allowed)
    null = [hs.sparse_coords(m) for m in N.m.null_generators(M.m.x0)]
    reps, _ = quotient_representatives(F, sols, null)
    return [hs.from_coords(v) for v in reps]


def adjunction_lift(alg: AlgebraObject, f: CMorphism, M: ABimodule, F_obj: CObject | None = None) -> FreydMorphism:
    """The bimodule map A F A -> M corresponding to f: F -> M0."""
    F_obj = f.source if F_obj is None else F_obj
    if f.target != M.m.x0 or f.source != F_obj:
        raise ValueError("adjunction_lift: endpoint mismatch")
    I0 = alg.id0()
    inner = compose(M.rho0, tensor_mor(f, I0))          # F A0 -> M0
    g0 = compose(M.lam0, tensor_mor(I0, inner))         # A0 F A0 -> M0
    return FreydMorphism(free_bimodule(alg, F_obj).m, M.m, g0)


def adjunction_drop(alg: AlgebraObject, g: FreydMorphism | CMorphism, F_obj: CObject) -> CMorphism:
    """The map F -> M0 corresponding to a bimodule map g: A F A -> M."""
    g0 = g.f0 if isinstance(g, FreydMorphism) else g
    afa = tensor_obj(tensor_obj(alg.A0, F_obj)[0], alg.A0)[0]
    if g0.source != afa:
        raise ValueError("adjunction_drop: endpoint mismatch")
    return compose(g0, tensor_mors(alg.iota0, identity_mor(F_obj), alg.iota0))


# ---------------------------------------------------------------- separability

@dataclass
class Separability:
    separable: bool
    e0: CMorphism | None = None      # 1 -> A0 A0
    s: FreydMorphism | None = None   # A -> AA

    def __bool__(self):
        return self.separable


def separability(alg: AlgebraObject) -> Separability:
    """Look for a bimodule section of the multiplication.

    Such a section s is determined by e = s iota: 1 -> AA, which must satisfy
    (mu (x) 1)(1 (x) e) = (1 (x) mu)(e (x) 1) and mu e = iota.
    """
    cat = alg.cat
    F = cat.field
    aa = alg.AA
    one = cat.unit_object()
    I0 = alg.id0()
    hs = cat.hom(one, aa.x0)
    images = []
    for e in hs.basis():
        c1 = compose(tensor_mor(alg.mu0, I0), tensor_mor(I0, e)) - compose(tensor_mor(I0, alg.mu0), tensor_mor(e, I0))
        images.append([c1, compose(alg.mu0, e)])
    rhs = [None, alg.iota0]
    allowed = [aa.null_generators(alg.A0), alg.a_obj.null_generators(one)]
    sol = affine_solution(F, images, rhs, allowed)
    if sol is None:
        return Separability(False)
    e0 = hs.from_coords(sol)
    s0 = compose(tensor_mor(alg.mu0, I0), tensor_mor(I0, e0))
    return Separability(True, e0, FreydMorphism(alg.a_obj, aa, s0))


def is_separable(alg: AlgebraObject) -> bool:
    return separability(alg).separable


# ---------------------------------------------------------------- constructors

def unit_algebra(cat: BackendCategory) -> AlgebraObject:
    one = cat.unit_object()
    I = identity_mor(one)
    return AlgebraObject(embed(one), I, iota0=I, name="unit")


def _gen_block(cat, g: int, h: int, m) -> CMorphism:
    return CMorphism(cat.gen_object(g), cat.gen_object(h), {(0, 0): m})


def cell_algebra(b: StructureAlgebra, e: int = 0, cat: BimoduleCategory | None = None, seed: int = 0) -> AlgebraObject:
    """(eB)* (x) eB in C_{B,X}, with evaluation as multiplication.

    (eB)* is identified with B e' for the first primitive idempotent e' that
    admits a linear form eps on eB e' making (v, x) -> eps(v x) a perfect
    pairing eB x Be' -> k.
    """
    if cat is None:
        cat = BimoduleCategory(b)
    F = b.field
    n_idem = len(b.idempotents)
    if not 0 <= e < n_idem:
        raise ValueError("idempotent index out of range")
    rng = random.Random(seed)
    for e2 in range(n_idem):
        g = cat.pairs.index((e2, e))
        V = cat.concrete[g]
        lsub, rsub = V.left_sub, V.right_sub       # B e2, e B
        if lsub.dim != rsub.dim:
            continue
        corner = cat._corner.get((e, e2))
        if corner is None:
            continue
        n = rsub.dim
        xs = [[lsub.basis[s, i] for s in range(b.dim)] for i in range(n)]
        vs = [[rsub.basis[s, j] for s in range(b.dim)] for j in range(n)]
        prods = [[corner_coords(corner, b.mul(vs[j], xs[i])) for i in range(n)] for j in range(n)]
        trials = [[F.one if t == c else F.zero for t in range(corner.dim)] for c in range(corner.dim)]
        trials += [[F(rng.randint(-5, 5)) for _ in range(corner.dim)] for _ in range(8)]
        for eps in trials:
            pair = F.matrix(n, n)
            for j in range(n):
                for i in range(n):
                    pair[j, i] = sum((eps[t] * prods[j][i][t] for t in range(corner.dim)), F.zero)
            if rank(pair) == n:
                return _cell_from_pairing(cat, g, eps, pair, name=f"cell({b.name or 'B'}, e{e})")
    raise ValueError("no Frobenius pairing found for this idempotent")


def corner_coords(corner, v) -> list:
    """Coordinates of an element of e B e' in the corner basis."""
    F = field_of(corner.basis)
    col = F.matrix(len(v), 1)
    for s, x in enumerate(v):
        col[s, 0] = x
    w = corner.coords(col)
    return [w[t, 0] for t in range(corner.dim)]


def _cell_from_pairing(cat: BimoduleCategory, g: int, eps, pair, name: str) -> AlgebraObject:
    F = cat.field
    B = cat.algebra
    A0 = cat.gen_object(g)
    AA, data = tensor_obj(A0, A0)
    # multiplication: eps(w_m) times the identity on summand m
    blocks = {}
    d = cat.gen_dim(g)
    for m, idx in enumerate(data.positions[(0, 0)]):
        if eps[m] != 0:
            blocks[(0, idx)] = F.identity(d) * eps[m]
    mu0 = CMorphism(AA, A0, blocks)
    # unit: 1 -> sum_i x_i (x) v_i with eps(v_j x_i) = delta_ij
    V = cat.concrete[g]
    n = V.left_sub.dim
    inv = pair.inv()
    # x'_i = sum_k inv[k, i] x_k satisfies eps(v_j x'_i) = delta_ji
    u = F.matrix(V.dim, 1)
    for i in range(n):
        for k in range(n):
            c = inv[k, i]
            if c != 0:
                u[k * n + i, 0] += c
    cols = [V.left[s] * u for s in range(B.dim)]
    iota_m = F.matrix(V.dim, B.dim)
    for s, c in enumerate(cols):
        for r in range(V.dim):
            iota_m[r, s] = c[r, 0]
    for s in range(B.dim):
        if V.right[s] * u != cols[s]:
            raise ArithmeticError("coevaluation is not a bimodule map")
    coords = cat.gen_coords(cat.unit, g, iota_m)
    iota0 = cat.hom(cat.unit_object(), A0).from_coords(coords)
    if iota0.to_matrix() != iota_m:
        raise ArithmeticError("coevaluation is not a morphism of the category")
    return AlgebraObject(embed(A0), mu0, iota0=iota0, name=name)


def graded_group_algebra(group: Group, field: Field, cat: GradedCategory | None = None) -> AlgebraObject:
    """The sum of all F_g with the group multiplication."""
    if cat is None:
        cat = GradedCategory(group, field)
    A0 = CObject(cat, tuple(range(group.order)))
    AA, data = tensor_obj(A0, A0)
    one = field.identity(1)
    blocks = {}
    for i in range(group.order):
        for j in range(group.order):
            blocks[(group.mul(i, j), data.positions[(i, j)][0])] = one
    mu0 = CMorphism(AA, A0, blocks)
    iota0 = CMorphism(cat.unit_object(), A0, {(group.identity, 0): one})
    return AlgebraObject(embed(A0), mu0, iota0=iota0, name=f"graded({group.name})")


def cd_extension_algebra(cat: BimoduleCategory) -> AlgebraObject:
    """1 -x-> 1 in C_{D,D}: the non-split extension of the simple top by itself."""
    one = cat.unit_object()
    D = cat.algebra
    if D.dim != 2:
        raise ValueError("expects the dual numbers")
    x = CMorphism(one, one, {(0, 0): D.left_matrix(D.basis_vector(1))})
    I = identity_mor(one)
    return AlgebraObject(PresentedObject(one, one, x), I, I, I, I, name="cd_extension")


# ---------------------------------------------------------------- inflation and deformation

def _spread(parts: dict, src_l: list, src_r: list, tgt_inj: list, source: CObject, target: CObject) -> CMorphism:
    """sum over (i, j, k) of j_k parts[(i,j,k)] (p_i (x) p_j)."""
    out = zero_mor(source, target)
    for (i, j, k), m in parts.items():
        if m is None:
            continue
        out = out + compose(tgt_inj[k], compose(m, tensor_mor(src_l[i], src_r[j])))
    return out


def _copies(x: CObject, n: int):
    s, inj, proj = direct_sum([x] * n)
    return s, inj, proj


def _block_diag(f: CMorphism, n: int, src: tuple, tgt: tuple) -> CMorphism:
    s, _, sp = src
    t, ti, _ = tgt
    out = zero_mor(s, t)
    for k in range(n):
        out = out + compose(ti[k], compose(f, sp[k]))
    return out


def inflate(alg: AlgebraObject, r: StructureAlgebra) -> AlgebraObject:
    """A (x) R on dim R copies of A, with multiplication sum c_ij^k j_k mu (p_i (x) p_j)."""
    if r.field != alg.field:
        raise ValueError("field mismatch")
    F = r.field
    if list(r.unit_coords) != [F.one] + [F.zero] * (r.dim - 1):
        raise ValueError("the unit of r must be basis element 0")
    rep = check_algebra(r)
    if not rep.passed:
        raise ValueError("r is not an associative unital algebra: " + ", ".join(rep.failures))
    n = r.dim
    c0 = _copies(alg.A0, n)
    c1 = _copies(alg.A1, n)
    a = _block_diag(alg.a, n, c1, c0)
    S0, inj0, proj0 = c0
    S1, inj1, proj1 = c1

    def parts(m):
        return {(i, j, k): m.scale(r.c[i][j][k]) for i in range(n) for j in range(n) for k in range(n)
                if r.c[i][j][k] != 0}

    mu0 = _spread(parts(alg.mu0), proj0, proj0, inj0, tensor_obj(S0, S0)[0], S0)
    mu01 = _spread(parts(alg.mu01), proj0, proj1, inj1, tensor_obj(S0, S1)[0], S1)
    mu10 = _spread(parts(alg.mu10), proj1, proj0, inj1, tensor_obj(S1, S0)[0], S1)
    iota0 = compose(inj0[0], alg.iota0)
    name = f"{alg.name}[{r.name or r.dim}]"
    return AlgebraObject(PresentedObject(S1, S0, a), mu0, mu01, mu10, iota0, name=name)


def cocycle_expressions(alg: AlgebraObject, g: TwoCochain) -> list[CMorphism]:
    """The four expressions whose classes vanish exactly for 2-cocycles.

    In order: associativity defect, left and right compatibility with a,
    and g1 composed with the relation map b of the kernel of a.
    """
    I0 = alg.id0()
    mu0, a, g0, g1 = alg.mu0, alg.a, g.g0, g.g1
    e1 = (compose(mu0, tensor_mor(I0, g0)) - compose(g0, alg.mu_left())
          + compose(g0, alg.mu_right()) - compose(mu0, tensor_mor(g0, I0)))
    e2 = compose(g0, alg.a_right()) + compose(g1, alg.mu01) - compose(mu0, tensor_mor(I0, g1))
    e3 = compose(g0, alg.a_left()) + compose(g1, alg.mu10) - compose(mu0, tensor_mor(g1, I0))
    b = relation_map(alg)
    e4 = compose(g1, b)
    return [e1, e2, e3, e4]


def kernel_of_a(alg: AlgebraObject):
    """KernelStep of a: its inclusion is b: A2 -> A1 and its presentation c: A3 -> A2."""
    step = getattr(alg, "_kernel_step", None)
    if step is None:
        from .freyd import kernel_presentation
        step = kernel_presentation(FreydMorphism(embed(alg.A1), embed(alg.A0), alg.a))
        alg._kernel_step = step
    return step


def relation_map(alg: AlgebraObject) -> CMorphism:
    """b: A2 -> A1 covering the kernel of a."""
    return kernel_of_a(alg).incl.f0


def is_cocycle(alg: AlgebraObject, g: TwoCochain) -> bool:
    return all(alg.a_obj.is_null(e) for e in cocycle_expressions(alg, g))


@dataclass
class Deformation:
    algebra: AlgebraObject
    h01: CMorphism
    h10: CMorphism
    eta1: CMorphism
    report: AxiomReport


def deform(alg: AlgebraObject, g: TwoCochain) -> Deformation:
    """The first-order deformation A^g over k[t]/(t^2) defined by a 2-cocycle."""
    if g.g0.source != tensor_obj(alg.A0, alg.A0)[0] or g.g0.target != alg.A0:
        raise ValueError("g0 must map A0 A0 -> A0")
    if g.g1.source != alg.A1 or g.g1.target != alg.A0:
        raise ValueError("g1 must map A1 -> A0")
    exprs = cocycle_expressions(alg, g)
    if not all(alg.a_obj.is_null(e) for e in exprs):
        raise HochError("NO-COCYCLE", "the pair fails the cocycle conditions")
    a = alg.a
    h01 = factor_through(a, exprs[1])
    h10 = factor_through(a, exprs[2])
    eta1 = factor_through(a, exprs[0])
    if h01 is None or h10 is None or eta1 is None:
        raise HochError("NO-FACTORIZATION", "a witness could not be solved for")
    S0, inj0, proj0 = _copies(alg.A0, 2)
    S1, inj1, proj1 = _copies(alg.A1, 2)
    # basis (1, t): index 0 is 1, index 1 is t
    ad = (compose(inj0[0], compose(a, proj1[0])) - compose(inj0[1], compose(g.g1, proj1[0]))
          + compose(inj0[1], compose(a, proj1[1])))
    mu0 = _spread({(0, 0, 0): alg.mu0, (0, 0, 1): g.g0, (0, 1, 1): alg.mu0, (1, 0, 1): alg.mu0},
                  proj0, proj0, inj0, tensor_obj(S0, S0)[0], S0)
    mu01 = _spread({(0, 0, 0): alg.mu01, (0, 0, 1): h01, (0, 1, 1): alg.mu01, (1, 0, 1): alg.mu01},
                   proj0, proj1, inj1, tensor_obj(S0, S1)[0], S1)
    mu10 = _spread({(0, 0, 0): alg.mu10, (0, 0, 1): h10, (0, 1, 1): alg.mu10, (1, 0, 1): alg.mu10},
                   proj1, proj0, inj1, tensor_obj(S1, S0)[0], S1)
    iota0 = compose(inj0[0], alg.iota0)
    out = AlgebraObject(PresentedObject(S1, S0, ad), mu0, mu01, mu10, iota0, name=f"{alg.name}^g")
    rep = check_axioms(out)
    return Deformation(out, h01, h10, eta1, rep)

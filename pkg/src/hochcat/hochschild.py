"""Hochschild cohomology of algebra objects.

Two independent routes:

* closed forms in degrees 0, 1, 2 on the reduced complex
  Hom(1, A) -> Hom(A0, A) -> Hom(A0 A0 + A1, A) -> ...,
  with cochains lifted to A0 and every condition read modulo a Hom(-, A1);
* a generic engine that resolves A by free bimodules A K A, choosing the
  generators K greedily, and takes cohomology of Hom(K_n, A).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field

from .algebra_object import (
    ABimodule,
    AlgebraObject,
    TwoCochain,
    cocycle_expressions,
    free_bimodule,
    inflate,
    kernel_of_a,
)
from .errors import HochError
from .exactlin import SparseEchelon, dense_to_sparse, kernel_basis, sparse_to_dense
from .findim_algebra import StructureAlgebra, classical_hh_dim
from .freyd import (
    FreydMorphism,
    PresentedObject,
    constrained_subspace,
    embed,
    freyd_tensors,
    greedy_cover,
    is_exact_at,
    quotient_representatives,
    realize_mor,
)
from .monoidal_backend import (
    CMorphism,
    CObject,
    column_mor,
    compose,
    direct_sum,
    identity_mor,
    tensor_mor,
    tensor_mors,
    tensor_obj,
    zero_mor,
)

DEFAULT_MAX_DEGREE = 3


@dataclass
class HHResult:
    degree: int
    dim: int
    basis: list = dc_field(default_factory=list)
    checks: dict = dc_field(default_factory=dict)
    info: dict = dc_field(default_factory=dict)


# ---------------------------------------------------------------- reduced differentials

def delta0(alg: AlgebraObject, g: CMorphism) -> CMorphism:
    """g: 1 -> A0  |->  mu0 (1 (x) g) - mu0 (g (x) 1): A0 -> A0."""
    I0 = alg.id0()
    return compose(alg.mu0, tensor_mor(I0, g)) - compose(alg.mu0, tensor_mor(g, I0))


def delta1(alg: AlgebraObject, f: CMorphism) -> TwoCochain:
    """f: A0 -> A0  |->  (mu0 (1 (x) f) - f mu0 + mu0 (f (x) 1), f a)."""
    I0 = alg.id0()
    g0 = compose(alg.mu0, tensor_mor(I0, f)) - compose(f, alg.mu0) + compose(alg.mu0, tensor_mor(f, I0))
    return TwoCochain(g0, compose(f, alg.a))


def delta2(alg: AlgebraObject, g: TwoCochain) -> list[CMorphism]:
    return cocycle_expressions(alg, g)


def hh0(alg: AlgebraObject) -> HHResult:
    """Classes f: 1 -> A with mu (1 (x) f) = mu (f (x) 1)."""
    cat, F = alg.cat, alg.field
    one = cat.unit_object()
    hs = cat.hom(one, alg.A0)
    images = [[delta0(alg, f)] for f in hs.basis()]
    allowed = [alg.a_obj.null_generators(alg.A0)]
    Z = constrained_subspace(F, images, allowed)
    N = [hs.sparse_coords(m) for m in alg.a_obj.null_generators(one)]
    reps, _ = quotient_representatives(F, Z, N)
    basis = [hs.from_coords(v) for v in reps]
    unit_class = not alg.a_obj.is_null(alg.iota0)
    checks = {"unit is central": alg.a_obj.is_null(delta0(alg, alg.iota0))}
    if unit_class:
        ech = SparseEchelon(F)
        for v in N:
            ech.add_untracked(v)
        checks["unit class nonzero"] = not ech.contains(hs.sparse_coords(alg.iota0))
    return HHResult(0, len(reps), basis, checks)


def derivations(alg: AlgebraObject) -> tuple:
    """(hom space, derivation vectors, inner-plus-null vectors) on Hom(A0, A0)."""
    cat, F = alg.cat, alg.field
    A = alg.a_obj
    hs = cat.hom(alg.A0, alg.A0)
    AA0 = tensor_obj(alg.A0, alg.A0)[0]
    images = []
    for f in hs.basis():
        d = compose(f, alg.mu0) - compose(alg.mu0, tensor_mor(alg.id0(), f)) - compose(alg.mu0, tensor_mor(f, alg.id0()))
        images.append([compose(f, alg.a), d])
    allowed = [A.null_generators(alg.A1), A.null_generators(AA0)]
    der = constrained_subspace(F, images, allowed)
    one = cat.unit_object()
    inner = [hs.sparse_coords(delta0(alg, g)) for g in cat.hom(one, alg.A0).basis()]
    inner += [hs.sparse_coords(m) for m in A.null_generators(alg.A0)]
    return hs, der, inner


def hh1(alg: AlgebraObject) -> HHResult:
    """Derivations modulo inner derivations."""
    F = alg.field
    hs, der, inner = derivations(alg)
    ech = SparseEchelon(F)
    for v in der:
        ech.add_untracked(v)
    inside = all(ech.contains(v) for v in inner)
    reps, _ = quotient_representatives(F, der, inner)
    return HHResult(1, len(reps), [hs.from_coords(v) for v in reps], {"inner are derivations": inside})


def _hh2_spaces(alg: AlgebraObject):
    cat, F = alg.cat, alg.field
    A = alg.a_obj
    A0, A1 = alg.A0, alg.A1
    AA0 = tensor_obj(A0, A0)[0]
    h0 = cat.hom(AA0, A0)
    h1 = cat.hom(A1, A0)
    n0 = h0.dim
    b = kernel_of_a(alg).incl.f0
    zero0, zero1 = zero_mor(AA0, A0), zero_mor(A1, A0)
    images = []
    for g0 in h0.basis():
        images.append(cocycle_expressions(alg, TwoCochain(g0, zero1)))
    for g1 in h1.basis():
        images.append(cocycle_expressions(alg, TwoCochain(zero0, g1)))
    srcs = [tensor_obj(AA0, A0)[0], tensor_obj(A0, A1)[0], tensor_obj(A1, A0)[0], b.source]
    allowed = [A.null_generators(s) for s in srcs]
    C = constrained_subspace(F, images, allowed)

    def coords(g: TwoCochain) -> dict:
        v = dict(h0.sparse_coords(g.g0))
        for k, x in h1.sparse_coords(g.g1).items():
            v[n0 + k] = x
        return v

    B = [coords(delta1(alg, f)) for f in cat.hom(A0, A0).basis()]
    B += [h0.sparse_coords(m) for m in A.null_generators(AA0)]
    B += [{n0 + k: x for k, x in h1.sparse_coords(m).items()} for m in A.null_generators(A1)]
    return h0, h1, C, B


def hh2(alg: AlgebraObject) -> HHResult:
    """dim C - dim B on lifted pairs (g0, g1)."""
    F = alg.field
    h0, h1, C, B = _hh2_spaces(alg)
    n0 = h0.dim
    ech = SparseEchelon(F)
    for v in C:
        ech.add_untracked(v)
    inside = all(ech.contains(v) for v in B)
    reps, rb = quotient_representatives(F, C, B)
    basis = []
    for v in reps:
        g0 = h0.from_coords({k: x for k, x in v.items() if k < n0})
        g1 = h1.from_coords({k - n0: x for k, x in v.items() if k >= n0})
        basis.append(TwoCochain(g0, g1))
    checks = {"coboundaries are cocycles": inside}
    return HHResult(2, len(C) - rb, basis, checks)


# ---------------------------------------------------------------- the replacement resolution

@dataclass
class ReplacementResolution:
    alg: AlgebraObject
    gens: list          # F_0 .. F_3 as objects of C
    parts: list         # summand lists of F_k
    terms: list         # free bimodules A F_k A
    maps: list          # d_1 .. d_3 as FreydMorphisms of the underlying objects
    kernel: object      # KernelStep of a (b, c)
    checks: dict


def _adjoint(alg: AlgebraObject, m: CMorphism, target_free: CObject | None) -> CMorphism:
    """Degree-0 part of the bimodule map A F A -> M determined by m: F -> M0,
    for M = A (target_free None) or M = A K A."""
    I0 = alg.id0()
    if target_free is None:
        return compose(alg.mu0, compose(alg.mu_left(), tensor_mors(I0, m, I0)))
    outer = tensor_mors(alg.mu0, identity_mor(target_free), alg.mu0)
    return compose(outer, tensor_mors(I0, m, I0))


def build_replacement_resolution(alg: AlgebraObject) -> ReplacementResolution:
    cat = alg.cat
    A0, A1, a = alg.A0, alg.A1, alg.a
    I0, I1 = alg.id0(), alg.id1()
    mu0, mu01, mu10, i0 = alg.mu0, alg.mu01, alg.mu10, alg.iota0
    step = kernel_of_a(alg)
    b = step.incl.f0
    A2 = b.source
    one = cat.unit_object()

    def tensor(*xs):
        out = xs[0]
        for x in xs[1:]:
            out = tensor_obj(out, x)[0]
        return out

    def ii(x: CObject):
        # iota (x) 1_X (x) iota: X -> A0 X A0
        return tensor_mors(i0, identity_mor(x), i0)

    F0 = one
    F1 = A0
    p2 = [tensor(A0, A0), A1]
    F2, inj2, _ = direct_sum(p2)
    p3 = [tensor(A0, A0, A0), tensor(A0, A1), tensor(A1, A0), A2]
    F3, _, _ = direct_sum(p3)

    # d1: A A0 A -> A A
    d1_0 = tensor_mor(mu0, I0) - tensor_mor(I0, mu0)
    m1 = compose(d1_0, ii(A0))
    # d2: A (A0 A0 + A1) A -> A A0 A
    sigma = (tensor_mors(mu0, I0, I0) - tensor_mors(I0, mu0, I0) + tensor_mors(I0, I0, mu0))
    m2 = column_mor([compose(sigma, ii(p2[0])), compose(tensor_mors(I0, a, I0), ii(A1))], F2)

    # d3: components land in A0 F2 A0 through 1 (x) inj (x) 1
    def up(k, m):
        return compose(tensor_mors(I0, inj2[k], I0), m)

    tau = (tensor_mors(mu0, I0, I0, I0) - tensor_mors(I0, mu0, I0, I0)
           + tensor_mors(I0, I0, mu0, I0) - tensor_mors(I0, I0, I0, mu0))
    c_000 = up(0, compose(tau, ii(p3[0])))
    c_01 = (up(0, compose(tensor_mors(I0, I0, a, I0), ii(p3[1])))
            + up(1, compose(tensor_mors(I0, mu01, I0) - tensor_mors(mu0, I1, I0), ii(p3[1]))))
    c_10 = (up(0, compose(tensor_mors(I0, a, I0, I0), ii(p3[2])))
            + up(1, compose(tensor_mors(I0, mu10, I0) - tensor_mors(I0, I1, mu0), ii(p3[2]))))
    c_2 = up(1, compose(tensor_mors(I0, b, I0), ii(A2)))
    m3 = column_mor([c_000, c_01, c_10, c_2], F3)

    gens = [F0, F1, F2, F3]
    terms = [free_bimodule(alg, x) for x in gens]
    d1 = FreydMorphism(terms[1].m, terms[0].m, _adjoint(alg, m1, one))
    d2 = FreydMorphism(terms[2].m, terms[1].m, _adjoint(alg, m2, F1))
    d3 = FreydMorphism(terms[3].m, terms[2].m, _adjoint(alg, m3, F2))
    eps = FreydMorphism(terms[0].m, alg.a_obj, mu0)
    checks = {
        "d0 d1 = 0": alg.a_obj.is_null(compose(eps.f0, d1.f0)),
        "d1 d2 = 0": terms[0].m.is_null(compose(d1.f0, d2.f0)),
        "d2 d3 = 0": terms[1].m.is_null(compose(d2.f0, d3.f0)),
        "maps descend": all(d.is_valid() for d in (d1, d2, d3)),
    }
    checks["exact at A A"] = is_exact_at(d1, eps)
    checks["exact at A A0 A"] = is_exact_at(d2, d1)
    checks["exact at degree 2"] = is_exact_at(d3, d2)
    return ReplacementResolution(alg, gens, [[one], [A0], p2, p3], terms, [d1, d2, d3], step, checks)


# ---------------------------------------------------------------- generic engine

@dataclass
class BimoduleResolution:
    alg: AlgebraObject
    gens: list        # K_0, K_1, ...: objects of C
    covers: list      # m_n: K_n -> (A K_{n-1} A)_0, resp. K_0 -> A0
    kernels: list     # kernels[n][T]: lifted morphisms T -> A0 K_n A0 spanning ker R(d_n)_T


def _free_obj(alg: AlgebraObject, k: CObject) -> PresentedObject:
    return freyd_tensors(alg.a_obj, embed(k), alg.a_obj)


def _bimodule_cover(alg: AlgebraObject, target: PresentedObject, prev: CObject | None, want: dict, seed: int):
    """Generators (T, m: T -> target0) whose adjoint images span want[T]."""
    cat = alg.cat
    F = cat.field
    gens = range(len(cat.gens))

    def candidate(t, v):
        r = target.realization(t)
        return r.lift(sparse_to_dense(v, r.dim, F))

    def image(t, m):
        g = cat.gen_object(t)
        src = tensor_obj(tensor_obj(alg.A0, g)[0], alg.A0)[0]
        adj = _adjoint(alg, m, prev)
        out = {}
        for t2 in gens:
            r = target.realization(t2)
            if not r.dim:
                continue
            hs = cat.hom(cat.gen_object(t2), src)
            out[t2] = [dense_to_sparse(r.project(compose(adj, u))) for u in hs.basis()]
        return out

    return greedy_cover(cat, want, candidate, image, seed=seed)


def _assemble(cat, chosen, target0: CObject):
    if not chosen:
        z = cat.zero_object()
        return z, zero_mor(z, target0)
    s, _, _ = direct_sum([cat.gen_object(t) for t, _ in chosen])
    return s, column_mor([m for _, m in chosen], s)


def bimodule_resolution(alg: AlgebraObject, n: int, seed: int = 0) -> BimoduleResolution:
    """Free bimodule resolution up to the kernel of d_n."""
    cat = alg.cat
    F = cat.field
    gens = range(len(cat.gens))
    A = alg.a_obj
    want = {t: [dense_to_sparse(v) for v in _identity_rows(A.realization(t).dim, F)] for t in gens}
    chosen = _bimodule_cover(alg, A, None, want, seed)
    k0, m0 = _assemble(cat, chosen, alg.A0)
    Ks, Ms, kernels = [k0], [m0], []
    target, prev_k = A, None
    for level in range(n + 1):
        k = Ks[-1]
        P = _free_obj(alg, k)
        d = FreydMorphism(P, target, _adjoint(alg, Ms[-1], prev_k))
        ker = {}
        lifted = {}
        for t in gens:
            r = P.realization(t)
            mat = realize_mor(d, t)
            vecs = kernel_basis(mat) if r.dim else []
            ker[t] = [dense_to_sparse(v) for v in vecs]
            lifted[t] = [r.lift(v) for v in vecs]
        kernels.append(lifted)
        if level == n:
            break
        chosen = _bimodule_cover(alg, P, k, ker, seed + level + 1)
        kn, mn = _assemble(cat, chosen, P.x0)
        Ks.append(kn)
        Ms.append(mn)
        target, prev_k = P, k
    return BimoduleResolution(alg, Ks, Ms, kernels)


def _identity_rows(n: int, F):
    out = []
    for i in range(n):
        v = [F.zero] * n
        v[i] = F.one
        out.append(v)
    return out


def hh_via_resolution(alg: AlgebraObject, n: int, max_degree: int = DEFAULT_MAX_DEGREE, seed: int = 0) -> HHResult:
    """dim HH^n from a free bimodule resolution built from scratch."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n > max_degree:
        raise HochError("DEPTH-EXCEEDED", f"degree {n} is above the bound {max_degree}")
    if n > DEFAULT_MAX_DEGREE:
        warnings.warn(f"degree {n} is above {DEFAULT_MAX_DEGREE}; resolutions grow quickly", stacklevel=2)
    cat, F = alg.cat, alg.field
    A = alg.a_obj
    res = bimodule_resolution(alg, n, seed)
    K = res.gens[n]
    hs = cat.hom(K, alg.A0)
    I0 = alg.id0()

    def pushed(phi: CMorphism) -> CMorphism:
        # adjoint A K A -> A of phi: K -> A0, degree 0
        return compose(alg.mu0, compose(alg.mu_left(), tensor_mors(I0, phi, I0)))

    conds_src = [(t, v) for t, vs in res.kernels[n].items() for v in vs]
    images = []
    for phi in hs.basis():
        adj = pushed(phi)
        images.append([compose(adj, v) for _, v in conds_src])
    allowed = [A.null_generators(v.source) for _, v in conds_src]
    Z = constrained_subspace(F, images, allowed)
    sub = [hs.sparse_coords(m) for m in A.null_generators(K)]
    if n >= 1:
        Kp = res.gens[n - 1]
        mn = res.covers[n]
        for psi in cat.hom(Kp, alg.A0).basis():
            sub.append(hs.sparse_coords(compose(pushed(psi), mn)))
    ech = SparseEchelon(F)
    for v in Z:
        ech.add_untracked(v)
    inside = all(ech.contains(v) for v in sub)
    reps, _ = quotient_representatives(F, Z, sub)
    return HHResult(n, len(reps), [hs.from_coords(v) for v in reps],
                    {"coboundaries are cocycles": inside}, {"generators": [len(k) for k in res.gens]})


# ---------------------------------------------------------------- Kunneth

@dataclass
class KunnethReport:
    degree: int
    left: int
    right: int
    terms: list

    @property
    def passed(self) -> bool:
        return self.left == self.right


def hh_dim(alg: AlgebraObject, n: int) -> int:
    if n == 0:
        return hh0(alg).dim
    if n == 1:
        return hh1(alg).dim
    if n == 2:
        return hh2(alg).dim
    return hh_via_resolution(alg, n).dim


def kunneth_check(alg: AlgebraObject, r: StructureAlgebra, n: int) -> KunnethReport:
    """dim HH^n(A inflated by R) against sum_{i+j=n} dim HH^i(A) dim HH^j(R)."""
    left = hh_dim(inflate(alg, r), n)
    terms = [(i, hh_dim(alg, i), classical_hh_dim(r, n - i)) for i in range(n + 1)]
    right = sum(x * y for _, x, y in terms)
    return KunnethReport(n, left, right, terms)

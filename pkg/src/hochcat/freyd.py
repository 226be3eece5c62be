"""Presentations X1 -> X0 and the abelian category they generate.

An object is a morphism x: X1 -> X0 of the underlying category C.  A morphism
(X1 -> X0) -> (Y1 -> Y0) is represented by its degree-0 part f0 alone: some
f1 with f0 x = y f1 must exist, and f0 only matters modulo y Hom(X0, Y1).  The
witness f1 is solved for on demand.

Realization evaluates an object at every generator T of C,
R(P)_T = Hom(T, P0) / p Hom(T, P1), which is how kernels and exactness are
decided.  Kernels are built by covering the kernel of a realized map with
representable objects, one generator at a time.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .exactlin import Field, Quotient, SparseEchelon, dense_to_sparse, is_zero, kernel_basis, rank, sparse_to_dense
from .monoidal_backend import (
    CMorphism,
    CObject,
    compose,
    direct_sum,
    identity_mor,
    column_mor,
    tensor_mor,
    tensor_obj,
    zero_mor,
)


class PresentedObject:
    """The cokernel-like object presented by x: X1 -> X0."""

    def __init__(self, x1: CObject, x0: CObject, x: CMorphism | None = None, name: str = ""):
        if x is None:
            x = zero_mor(x1, x0)
        if x.source != x1 or x.target != x0:
            raise ValueError("presentation map has wrong endpoints")
        self.x1, self.x0, self.x = x1, x0, x
        self.name = name
        self._spans: dict = {}
        self._real: dict = {}

    @property
    def cat(self):
        return self.x0.cat

    @property
    def field(self) -> Field:
        return self.x0.cat.field

    def __repr__(self):
        nm = f"{self.name}: " if self.name else ""
        return f"<{nm}{self.x1!r} -> {self.x0!r}>"

    def null_span(self, source: CObject) -> SparseEchelon:
        """Echelon basis of x Hom(source, X1), the null-homotopic part of Hom(source, X0)."""
        key = source.summands
        ech = self._spans.get(key)
        if ech is None:
            ech = SparseEchelon(self.field)
            if len(self.x1) and len(source):
                for h in self.cat.hom(source, self.x1).basis():
                    ech.add_untracked(compose(self.x, h).flat())
            self._spans[key] = ech
        return ech

    def null_generators(self, source: CObject) -> list[CMorphism]:
        """Spanning morphisms x h of the null-homotopic part of Hom(source, X0)."""
        if not len(self.x1) or not len(source):
            return []
        return [compose(self.x, h) for h in self.cat.hom(source, self.x1).basis()]

    def is_null(self, f0: CMorphism) -> bool:
        """True if f0: S -> X0 factors through x."""
        if f0.is_zero():
            return True
        if not len(self.x1):
            return False
        return self.null_span(f0.source).contains(f0.flat())

    def realization(self, g: int) -> "RealizedSpace":
        r = self._real.get(g)
        if r is None:
            r = RealizedSpace(self, g)
            self._real[g] = r
        return r


def embed(x: CObject, name: str = "") -> PresentedObject:
    """X viewed as the presentation 0 -> X."""
    return PresentedObject(x.cat.zero_object(), x, None, name)


def factor_through(y: CMorphism, target: CMorphism) -> CMorphism | None:
    """Some h with y h = target, or None."""
    cat = y.cat
    if target.is_zero():
        return zero_mor(target.source, y.source)
    hs = cat.hom(target.source, y.source)
    ech = SparseEchelon(cat.field, track=True)
    for n, h in enumerate(hs.basis()):
        ech.add(compose(y, h).flat(), label=n)
    v, combo = ech._reduce(target.flat(), {})
    if v:
        return None
    return hs.from_coords({n: -c for n, c in combo.items()})


def witness(f0: CMorphism, x: CMorphism, y: CMorphism) -> CMorphism | None:
    """Some f1 with f0 x = y f1, or None."""
    return factor_through(y, compose(f0, x))


class FreydMorphism:
    """A morphism of presented objects, stored by its degree-0 part."""

    def __init__(self, source: PresentedObject, target: PresentedObject, f0: CMorphism,
                 f1: CMorphism | None = None, check: bool = False):
        if f0.source != source.x0 or f0.target != target.x0:
            raise ValueError("degree-0 part has wrong endpoints")
        self.source, self.target, self.f0 = source, target, f0
        if f1 is not None and (f1.source != source.x1 or f1.target != target.x1):
            f1 = None
        self._f1 = f1
        if check and self.f1 is None:
            raise ValueError("degree-0 part does not descend to the presented objects")

    @property
    def f1(self) -> CMorphism | None:
        if self._f1 is None:
            self._f1 = witness(self.f0, self.source.x, self.target.x)
        return self._f1

    def is_valid(self) -> bool:
        return self.f1 is not None

    @property
    def field(self):
        return self.f0.field

    def __repr__(self):
        return f"FreydMorphism({self.source!r} -> {self.target!r})"

    def is_zero(self) -> bool:
        return self.target.is_null(self.f0)

    def same_class(self, other: "FreydMorphism") -> bool:
        return self.target.is_null(self.f0 - other.f0)

    def __eq__(self, other):
        if not isinstance(other, FreydMorphism):
            return NotImplemented
        return self.same_class(other)

    __hash__ = None

    def __add__(self, other):
        f1 = self._f1 + other._f1 if self._f1 is not None and other._f1 is not None else None
        return FreydMorphism(self.source, self.target, self.f0 + other.f0, f1)

    def __neg__(self):
        return FreydMorphism(self.source, self.target, -self.f0, -self._f1 if self._f1 is not None else None)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return FreydMorphism(self.source, self.target, self.f0.scale(c),
                             self._f1.scale(c) if self._f1 is not None else None)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        return freyd_compose(self, other)

    def normal_form(self) -> dict:
        """Canonical sparse vector of the class of f0."""
        return self.target.null_span(self.source.x0).reduce(self.f0.flat())


def freyd_identity(p: PresentedObject) -> FreydMorphism:
    return FreydMorphism(p, p, identity_mor(p.x0), identity_mor(p.x1))


def freyd_zero(p: PresentedObject, q: PresentedObject) -> FreydMorphism:
    return FreydMorphism(p, q, zero_mor(p.x0, q.x0), zero_mor(p.x1, q.x1))


def freyd_compose(g: FreydMorphism, f: FreydMorphism) -> FreydMorphism:
    """g o f; the middle objects need only agree in degree 0."""
    f1 = None
    if f._f1 is not None and g._f1 is not None and f._f1.target == g._f1.source:
        f1 = compose(g._f1, f._f1)
    return FreydMorphism(f.source, g.target, compose(g.f0, f.f0), f1)


def freyd_tensor(p: PresentedObject, q: PresentedObject) -> PresentedObject:
    """(P1 Q0 + P0 Q1) -> P0 Q0 with the map [x (x) 1, 1 (x) y]."""
    a, _ = tensor_obj(p.x1, q.x0)
    b, _ = tensor_obj(p.x0, q.x1)
    s, _, _ = direct_sum([a, b])
    m = column_mor([tensor_mor(p.x, identity_mor(q.x0)), tensor_mor(identity_mor(p.x0), q.x)], s)
    name = f"{p.name}{q.name}" if p.name and q.name else ""
    return PresentedObject(s, m.target, m, name)


def freyd_tensor_mor(f: FreydMorphism, g: FreydMorphism) -> FreydMorphism:
    src = freyd_tensor(f.source, g.source)
    tgt = freyd_tensor(f.target, g.target)
    f0 = tensor_mor(f.f0, g.f0)
    f1 = None
    if f._f1 is not None and g._f1 is not None:
        a = tensor_mor(f._f1, g.f0)
        b = tensor_mor(f.f0, g._f1)
        _, inj, _ = direct_sum([a.target, b.target])
        f1 = column_mor([compose(inj[0], a), compose(inj[1], b)], src.x1)
    return FreydMorphism(src, tgt, f0, f1)


def freyd_tensors(*objs: PresentedObject) -> PresentedObject:
    out = objs[0]
    for o in objs[1:]:
        out = freyd_tensor(out, o)
    return out


def canonical_epi(p: PresentedObject) -> FreydMorphism:
    """embed(P0) -> P."""
    return FreydMorphism(embed(p.x0), p, identity_mor(p.x0), zero_mor(p.cat.zero_object(), p.x1))


# ---------------------------------------------------------------- linear algebra over hom spaces

def _tagged(tag, m: CMorphism) -> dict:
    return {(tag,) + k: x for k, x in m.flat().items()}


def constrained_subspace(field: Field, images: Sequence[Sequence[CMorphism | None]],
                         allowed: Sequence[Sequence[CMorphism]] = ()) -> list[dict]:
    """Basis of {c : sum_k c_k images[k][t] lies in span(allowed[t]) for every t}.

    images[k][t] is the value of condition t on unknown k.  Returned vectors
    are sparse dicts over the unknown indices.
    """
    ech = SparseEchelon(field, track=True)
    for t, gens in enumerate(allowed):
        for m in gens:
            ech.add_untracked(_tagged(t, m))
    out = []
    for k, conds in enumerate(images):
        v = {}
        for t, m in enumerate(conds):
            if m is not None:
                v.update(_tagged(t, m))
        ok, rel = ech.add(v, label=k)
        if not ok:
            out.append(rel)
    return out


def affine_solution(field: Field, images: Sequence[Sequence[CMorphism | None]],
                    rhs: Sequence[CMorphism | None],
                    allowed: Sequence[Sequence[CMorphism]] = ()) -> dict | None:
    """Some c with sum_k c_k images[k][t] - rhs[t] in span(allowed[t]) for all t."""
    extra = [(-m if m is not None else None) for m in rhs]
    k = len(images)
    rels = constrained_subspace(field, list(images) + [extra], allowed)
    for rel in rels:
        c = rel.get(k)
        if c is not None and c != 0:
            return {i: x / c for i, x in rel.items() if i != k}
    return None


def quotient_representatives(field: Field, space: Sequence[dict], sub: Sequence[dict]):
    """(representatives of space / sub, rank of sub); sub is assumed inside space."""
    ech = SparseEchelon(field)
    for v in sub:
        ech.add_untracked(v)
    r = ech.rank
    reps = [v for v in space if ech.add_untracked(v)]
    return reps, r


def freyd_hom_basis(p: PresentedObject, q: PresentedObject) -> list[FreydMorphism]:
    """Representatives of a basis of Hom(P, Q)."""
    cat = p.cat
    F = cat.field
    h0 = cat.hom(p.x0, q.x0)
    h1 = cat.hom(p.x1, q.x1)
    n0 = h0.dim
    ech = SparseEchelon(F, track=True)
    rels = []
    for n, s in enumerate(h0.basis()):
        ok, rel = ech.add(compose(s, p.x).flat(), label=n)
        if not ok:
            rels.append(rel)
    for n, t in enumerate(h1.basis()):
        ok, rel = ech.add(compose(q.x, t).flat(), label=n0 + n)
        if not ok:
            rels.append(rel)
    pairs = []
    ech0 = SparseEchelon(F)
    for rel in rels:
        a = {k: x for k, x in rel.items() if k < n0}
        if a and ech0.add_untracked(a):
            pairs.append(rel)
    null = [h0.sparse_coords(m) for m in q.null_generators(p.x0)]
    quot = SparseEchelon(F)
    for v in null:
        quot.add_untracked(v)
    out = []
    for rel in pairs:
        a = {k: x for k, x in rel.items() if k < n0}
        if quot.add_untracked(a):
            b = {k - n0: -x for k, x in rel.items() if k >= n0}
            out.append(FreydMorphism(p, q, h0.from_coords(a), h1.from_coords(b)))
    return out


# ---------------------------------------------------------------- realization

class RealizedSpace:
    """R(P)_T = Hom(T, P0) / p Hom(T, P1) for a generator T."""

    def __init__(self, p: PresentedObject, g: int):
        cat = p.cat
        self.p, self.g = p, g
        self.gen = cat.gen_object(g)
        self.hom = cat.hom(self.gen, p.x0)
        sub = [self.hom.coords(m) for m in p.null_generators(self.gen)]
        self.quotient = Quotient(cat.field, self.hom.dim, sub)
        self.dim = self.quotient.dim

    def project(self, m: CMorphism) -> list:
        return self.quotient.project(self.hom.coords(m))

    def lift(self, coords) -> CMorphism:
        return self.hom.from_coords(self.quotient.lift(coords))

    def basis(self) -> list[CMorphism]:
        F = self.p.field
        out = []
        for n in range(self.dim):
            e = [F.zero] * self.dim
            e[n] = F.one
            out.append(self.lift(e))
        return out


def realize(p: PresentedObject) -> dict:
    """Dimensions of R(P)_T for each generator T."""
    return {g: p.realization(g).dim for g in range(len(p.cat.gens))}


def realize_mor(f: FreydMorphism, g: int):
    """The linear map R(f)_T, as a matrix (target dim x source dim)."""
    F = f.field
    rs, rt = f.source.realization(g), f.target.realization(g)
    cols = [rt.project(compose(f.f0, m)) for m in rs.basis()]
    return F.from_columns(cols, rt.dim) if cols else F.matrix(rt.dim, 0)


def realize_action(p: PresentedObject, u: CMorphism):
    """The map R(P)_T -> R(P)_T' induced by precomposition with u: T' -> T."""
    F = p.field
    t = u.target.summands[0]
    s = u.source.summands[0]
    rs, rt = p.realization(t), p.realization(s)
    cols = [rt.project(compose(m, u)) for m in rs.basis()]
    return F.from_columns(cols, rt.dim) if cols else F.matrix(rt.dim, 0)


def is_exact_at(f: FreydMorphism, g: FreydMorphism) -> bool:
    """Exactness of P -f-> Q -g-> S, checked on every realization."""
    for t in range(len(f.source.cat.gens)):
        a = realize_mor(f, t)
        b = realize_mor(g, t)
        if a.ncols() and b.nrows() and not is_zero(b * a):
            return False
        n = f.target.realization(t).dim
        if n - rank(b) != rank(a):
            return False
    return True


# ---------------------------------------------------------------- kernels and resolutions

def greedy_cover(cat, targets: dict, candidates: Callable, image: Callable, seed: int = 0):
    """Choose generators until their images contain the target subspaces.

    targets[T] lists vectors (sparse dicts) to be covered in the space at T;
    candidates(T, v) turns a vector into a cover morphism; image(T, m) returns
    {T': vectors} spanned by that morphism.  A random combination of the
    uncovered vectors is tried first, then the vectors themselves.
    """
    F = cat.field
    rng = random.Random(seed)
    spans = {t: SparseEchelon(F) for t in targets}
    chosen = []

    def uncovered(t):
        return [v for v in targets[t] if not spans[t].contains(v)]

    def absorb(t, m):
        gain = 0
        for t2, vecs in image(t, m).items():
            if t2 in spans:
                for v in vecs:
                    gain += spans[t2].add_untracked(v)
        return gain

    for t in targets:
        while True:
            left = uncovered(t)
            if not left:
                break
            combo = {}
            for v in left:
                c = F(rng.randint(1, 7))
                for k, x in v.items():
                    combo[k] = combo.get(k, F.zero) + c * x
            combo = {k: x for k, x in combo.items() if x != 0}
            trial = [combo] if combo and len(left) > 1 else []
            for v in trial + left:
                m = candidates(t, v)
                if absorb(t, m):
                    chosen.append((t, m))
                    break
            else:
                raise RuntimeError("cover did not make progress")
    return chosen


@dataclass
class KernelStep:
    """kernel object k with its inclusion into the source of the map."""
    k: PresentedObject
    incl: FreydMorphism


def _yoneda_cover(cat, kernels: dict, to_target: Callable, rspace: Callable):
    """Cover kernels[T] (vectors in the realization coordinates at T) by
    generators; to_target(T, v) gives the morphism T -> X0 and rspace(T')
    projects a morphism T' -> X0 to realization coordinates."""
    gens = range(len(cat.gens))

    def image(t, m):
        out = {}
        for t2 in gens:
            hs = cat.hom(cat.gen_object(t2), cat.gen_object(t))
            out[t2] = [dense_to_sparse(rspace(t2, compose(m, u))) for u in hs.basis()]
        return out

    return greedy_cover(cat, kernels, to_target, image)


def _cover_object(cat, chosen, target: CObject):
    if not chosen:
        z = cat.zero_object()
        return z, zero_mor(z, target)
    objs = [cat.gen_object(t) for t, _ in chosen]
    s, _, _ = direct_sum(objs)
    return s, column_mor([m for _, m in chosen], s)


def kernel_presentation(f: FreydMorphism) -> KernelStep:
    """A presentation of ker(f) with its inclusion into the source."""
    p = f.source
    cat = p.cat
    F = cat.field
    gens = range(len(cat.gens))
    kernels = {}
    for t in gens:
        a = realize_mor(f, t)
        kernels[t] = [dense_to_sparse(v) for v in kernel_basis(a)] if a.ncols() else []
    chosen = _yoneda_cover(
        cat, kernels,
        lambda t, v: p.realization(t).lift(sparse_to_dense(v, p.realization(t).dim, F)),
        lambda t, m: p.realization(t).project(m))
    k0, m = _cover_object(cat, chosen, p.x0)
    # relations among the cover: kernel of Hom(T, K0) -> R(P)_T
    emb = embed(k0)
    inc = FreydMorphism(emb, p, m)
    rel = {}
    for t in gens:
        a = realize_mor(inc, t)
        rel[t] = [dense_to_sparse(v) for v in kernel_basis(a)] if a.ncols() else []
    chosen1 = _yoneda_cover(
        cat, rel,
        lambda t, v: emb.realization(t).lift(sparse_to_dense(v, emb.realization(t).dim, F)),
        lambda t, mm: emb.realization(t).project(mm))
    k1, c = _cover_object(cat, chosen1, k0)
    k = PresentedObject(k1, k0, c)
    return KernelStep(k, FreydMorphism(k, p, m))


def syzygy(d: CMorphism) -> CMorphism:
    """A map K -> X covering the kernel of Hom(-, X) -> Hom(-, Y) induced by d."""
    x = embed(d.source)
    step_obj = FreydMorphism(x, embed(d.target), d)
    cat = d.cat
    F = cat.field
    kernels = {}
    for t in range(len(cat.gens)):
        a = realize_mor(step_obj, t)
        kernels[t] = [dense_to_sparse(v) for v in kernel_basis(a)] if a.ncols() else []
    chosen = _yoneda_cover(
        cat, kernels,
        lambda t, v: x.realization(t).lift(sparse_to_dense(v, x.realization(t).dim, F)),
        lambda t, m: x.realization(t).project(m))
    _, m = _cover_object(cat, chosen, d.source)
    return m


def projective_resolution(p: PresentedObject, n: int) -> list[CMorphism]:
    """Maps d_1, ..., d_n of a resolution P_n -> ... -> P_0 of p by objects of C."""
    ds = [p.x]
    while len(ds) < n:
        last = ds[-1]
        if not len(last.source):
            ds.append(zero_mor(last.source.cat.zero_object(), last.source))
            continue
        ds.append(syzygy(last))
    return ds[:n]


def ext_dim(p: PresentedObject, q: PresentedObject, n: int) -> int:
    """dim Ext^n(P, Q) from a resolution of P by objects of C."""
    cat = p.cat
    F = cat.field
    ds = projective_resolution(p, n + 1)
    pn = ds[n - 1].source if n >= 1 else p.x0
    dn1 = ds[n]
    hs = cat.hom(pn, q.x0)
    basis = hs.basis()
    # cocycles: f o d_{n+1} null in Q
    allowed = [q.null_generators(dn1.source)]
    cocycles = constrained_subspace(F, [[compose(f, dn1)] for f in basis], allowed)
    sub = [hs.sparse_coords(m) for m in q.null_generators(pn)]
    if n >= 1:
        prev = ds[n - 1].target
        sub += [hs.sparse_coords(compose(g, ds[n - 1])) for g in cat.hom(prev, q.x0).basis()]
    reps, _ = quotient_representatives(F, cocycles, sub)
    return len(reps)

"""Builtin algebra objects and their explicit JSON form.

Every builtin is determined by a base algebra object, its backend, and an
optional inflation by the dual numbers or by 2x2 matrices.  Explicit
algebras list the summands of A1 and A0 (generator indices of the backend)
and the structure morphisms as blocks between summands.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra_object import (
    AlgebraObject,
    cd_extension_algebra,
    cell_algebra,
    graded_group_algebra,
    inflate,
    unit_algebra,
)
from .errors import ValidationError
from .exactlin import Field, field_for
from .findim_algebra import (
    Group,
    StructureAlgebra,
    check_algebra,
    cyclic_group,
    dual_numbers,
    matrix_algebra,
)
from .freyd import PresentedObject
from .monoidal_backend import BackendCategory, BimoduleCategory, CMorphism, CObject, GradedCategory, tensor_obj


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    base: str
    inflation: str | None
    description: str
    default_characteristic: int

    def descriptor(self) -> dict:
        return {
            "name": self.name,
            "base": self.base,
            "inflation": self.inflation,
            "description": self.description,
            "default_characteristic": self.default_characteristic,
        }


BASES = {
    "cell_D": ("cell algebra (eD)* (x) eD over the dual numbers D, in C_{D,D}", 0),
    "cd_extension": ("1 -x-> 1 in C_{D,D}, the non-split self-extension of the simple top", 0),
    "unit": ("the trivial algebra object 1 in C_{D,D}", 0),
    "vecg_c2": ("sum of all F_g in Vec_G for G = C2", 2),
    "vecg_c3": ("sum of all F_g in Vec_G for G = C3", 3),
    "vecg_c5": ("sum of all F_g in Vec_G for G = C5", 5),
}

INFLATIONS = {
    "dual": ("inflated by the dual numbers", dual_numbers),
    "mat2": ("inflated by 2x2 matrices", lambda F: matrix_algebra(2, F)),
}


def _entries() -> list[CatalogEntry]:
    out = []
    for base, (desc, p) in BASES.items():
        out.append(CatalogEntry(base, base, None, desc, p))
    for base, (desc, p) in BASES.items():
        for infl, (idesc, _) in INFLATIONS.items():
            out.append(CatalogEntry(f"{base}+{infl}", base, infl, f"{desc}, {idesc}", p))
    return out


ENTRIES = {e.name: e for e in _entries()}


def catalog() -> list[dict]:
    return [e.descriptor() for e in ENTRIES.values()]


def structure_algebra(name: str, field: Field) -> StructureAlgebra:
    """Named structure algebras accepted in configs."""
    if name == "dual_numbers":
        return dual_numbers(field)
    if name.startswith("matrix_algebra(") and name.endswith(")"):
        return matrix_algebra(int(name[len("matrix_algebra("):-1]), field)
    if name in ("k", "scalar"):
        return StructureAlgebra(field, [[[1]]], [1], ["1"], name="k")
    raise ValidationError(f"unknown structure algebra {name!r}")


# ---------------------------------------------------------------- backends

def backend_config(name: str) -> dict:
    """The backend a builtin lives in, in config form."""
    entry = ENTRIES.get(name)
    if entry is None:
        raise ValidationError(f"unknown builtin {name!r}", "/algebra/builtin")
    if entry.base.startswith("vecg_c"):
        return {"graded": {"group_table": cyclic_group(int(entry.base[6:])).table}}
    return {"bimodule": {"algebra": {"builtin": "dual_numbers"}}}


def build_backend(cfg: dict, field: Field) -> BackendCategory:
    if not isinstance(cfg, dict) or len(cfg) != 1:
        raise ValidationError("backend must be {bimodule: ...} or {graded: ...}", "/backend")
    (kind, body), = cfg.items()
    if not isinstance(body, dict):
        raise ValidationError("backend body must be an object", f"/backend/{kind}")
    if kind == "bimodule":
        alg_cfg = body.get("algebra")
        B = parse_structure_algebra(alg_cfg, field, "/backend/bimodule/algebra")
        sub = body.get("center_sub")
        try:
            return BimoduleCategory(B, sub)
        except (ValueError, ArithmeticError, TypeError) as exc:
            raise ValidationError(str(exc), "/backend/bimodule/center_sub") from exc
    if kind == "graded":
        table = body.get("group_table")
        try:
            group = Group(table, name=f"G{len(table)}")
        except (ValueError, TypeError) as exc:
            raise ValidationError(str(exc), "/backend/graded/group_table") from exc
        return GradedCategory(group, field)
    raise ValidationError(f"unknown backend {kind!r}", "/backend")


def parse_structure_algebra(cfg, field: Field, pointer: str) -> StructureAlgebra:
    if isinstance(cfg, str):
        cfg = {"builtin": cfg}
    if not isinstance(cfg, dict):
        raise ValidationError("expected a structure algebra", pointer)
    if "builtin" in cfg:
        try:
            return structure_algebra(cfg["builtin"], field)
        except ValidationError as exc:
            raise ValidationError(exc.detail, pointer + "/builtin") from exc
    try:
        r = StructureAlgebra.from_json(cfg, field)
    except (KeyError, ValueError, TypeError, IndexError, ZeroDivisionError) as exc:
        raise ValidationError(f"malformed structure algebra: {exc}", pointer) from exc
    n = r.dim
    if any(len(plane) != n or any(len(row) != n for row in plane) for plane in cfg["structure_constants"]):
        raise ValidationError("structure constants must be dim x dim x dim", pointer + "/structure_constants")
    if len(r.unit_coords) != n:
        raise ValidationError("unit_coords has the wrong length", pointer + "/unit_coords")
    rep = check_algebra(r)
    if not rep.passed:
        raise ValidationError("; ".join(rep.failures), pointer)
    return r


# ---------------------------------------------------------------- builtins

def build_builtin(name: str, cat: BackendCategory) -> AlgebraObject:
    entry = ENTRIES.get(name)
    if entry is None:
        raise ValidationError(f"unknown builtin {name!r}", "/algebra/builtin")
    F = cat.field
    base = entry.base
    if base.startswith("vecg_c"):
        if not isinstance(cat, GradedCategory):
            raise ValidationError(f"{name} needs a graded backend", "/backend")
        alg = graded_group_algebra(cat.group, F, cat)
    else:
        if not isinstance(cat, BimoduleCategory) or cat.algebra.dim != 2:
            raise ValidationError(f"{name} needs the bimodule backend over the dual numbers", "/backend")
        if base == "cell_D":
            alg = cell_algebra(cat.algebra, 0, cat)
        elif base == "cd_extension":
            alg = cd_extension_algebra(cat)
        else:
            alg = unit_algebra(cat)
    if entry.inflation is not None:
        alg = inflate(alg, INFLATIONS[entry.inflation][1](F))
    alg.name = name
    return alg


# ---------------------------------------------------------------- explicit form

def morphism_to_json(f: CMorphism) -> dict:
    fmt = f.field.format
    blocks = []
    for (j, i) in sorted(f.blocks):
        b = f.blocks[(j, i)]
        blocks.append({"target": j, "source": i,
                       "matrix": [[fmt(b[r, c]) for c in range(b.ncols())] for r in range(b.nrows())]})
    return {"source": list(f.source.summands), "target": list(f.target.summands), "blocks": blocks}


def morphism_from_json(data, source: CObject, target: CObject, pointer: str) -> CMorphism:
    """Blocks checked against the generator dimensions and hom spaces."""
    cat = source.cat
    F = cat.field
    if data is None:
        return CMorphism(source, target)
    if isinstance(data, list):
        data = {"blocks": data}
    if not isinstance(data, dict):
        raise ValidationError("expected a morphism", pointer)
    for key, obj in (("source", source), ("target", target)):
        if key in data and list(data[key]) != list(obj.summands):
            raise ValidationError(f"{key} summands do not match", f"{pointer}/{key}")
    blocks = {}
    for n, blk in enumerate(data.get("blocks", [])):
        here = f"{pointer}/blocks/{n}"
        try:
            j, i, rows = int(blk["target"]), int(blk["source"]), blk["matrix"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError("block needs target, source and matrix", here) from exc
        if not (0 <= j < len(target) and 0 <= i < len(source)):
            raise ValidationError("summand index out of range", here)
        g, h = source.summands[i], target.summands[j]
        nr, nc = cat.gen_dim(h), cat.gen_dim(g)
        if len(rows) != nr or any(len(r) != nc for r in rows):
            raise ValidationError(f"matrix must be {nr} x {nc}", here + "/matrix")
        try:
            m = F.from_rows(rows, nc) if nr else F.matrix(0, nc)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad scalar: {exc}", here + "/matrix") from exc
        basis = cat.gen_hom_basis(g, h)
        coords = cat.gen_coords(g, h, m)
        back = F.matrix(nr, nc)
        for c, bm in zip(coords, basis):
            back += bm * c
        if back != m:
            raise ValidationError("block is not a morphism of the category", here + "/matrix")
        blocks[(j, i)] = blocks[(j, i)] + m if (j, i) in blocks else m
    return CMorphism(source, target, blocks)


def algebra_to_json(alg: AlgebraObject) -> dict:
    return {
        "name": alg.name,
        "A1": list(alg.A1.summands),
        "A0": list(alg.A0.summands),
        "a": morphism_to_json(alg.a),
        "mu0": morphism_to_json(alg.mu0),
        "mu01": morphism_to_json(alg.mu01),
        "mu10": morphism_to_json(alg.mu10),
        "iota0": morphism_to_json(alg.iota0),
    }


def _summands(data, key: str, cat: BackendCategory, pointer: str) -> CObject:
    vals = data.get(key, [])
    if not isinstance(vals, list) or not all(isinstance(g, int) and 0 <= g < len(cat.gens) for g in vals):
        raise ValidationError(f"expected a list of generator indices below {len(cat.gens)}", f"{pointer}/{key}")
    return CObject(cat, vals)


def algebra_from_json(data: dict, cat: BackendCategory, pointer: str = "/algebra/explicit") -> AlgebraObject:
    if not isinstance(data, dict):
        raise ValidationError("expected an object", pointer)
    A1 = _summands(data, "A1", cat, pointer)
    A0 = _summands(data, "A0", cat, pointer)
    one = cat.unit_object()
    a = morphism_from_json(data.get("a"), A1, A0, pointer + "/a")
    mu0 = morphism_from_json(data.get("mu0"), tensor_obj(A0, A0)[0], A0, pointer + "/mu0")
    mu01 = morphism_from_json(data.get("mu01"), tensor_obj(A0, A1)[0], A1, pointer + "/mu01")
    mu10 = morphism_from_json(data.get("mu10"), tensor_obj(A1, A0)[0], A1, pointer + "/mu10")
    iota0 = morphism_from_json(data.get("iota0"), one, A0, pointer + "/iota0")
    return AlgebraObject(PresentedObject(A1, A0, a), mu0, mu01, mu10, iota0, name=data.get("name", "explicit"))


def explicit_config(name: str, characteristic: int | None = None) -> dict:
    """The explicit run-config form of a builtin, for round trips."""
    entry = ENTRIES[name]
    p = entry.default_characteristic if characteristic is None else characteristic
    F = field_for(p)
    bcfg = backend_config(name)
    cat = build_backend(bcfg, F)
    alg = build_builtin(name, cat)
    if "bimodule" in bcfg:
        bcfg = {"bimodule": {"algebra": cat.algebra.to_json(),
                             "center_sub": [[F.format(x) for x in z] for z in cat.center_sub]}}
    return {"field": {"characteristic": p}, "backend": bcfg, "algebra": {"explicit": algebra_to_json(alg)}}

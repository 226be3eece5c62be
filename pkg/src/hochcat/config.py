"""Run configurations: parsing and validation with JSON-pointer messages."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra_object import AlgebraObject, check_axioms
from .catalog import ENTRIES, algebra_from_json, backend_config, build_backend, build_builtin
from .errors import ValidationError
from .exactlin import Field, field_for
from .findim_algebra import cyclic_group, dual_numbers
from .monoidal_backend import BackendCategory, BimoduleCategory, GradedCategory

COMMANDS = ("check", "hh0", "hh1", "hh2", "hh", "separable", "inflate", "deform", "ext1", "kunneth")


@dataclass
class RunConfig:
    field: Field
    cat: BackendCategory
    algebra: AlgebraObject
    algebra_id: str
    command: str
    args: dict = dc_field(default_factory=dict)
    format: str = "json"
    emit_basis: bool = False


def parse_field(cfg, default: int) -> Field:
    if cfg is None:
        cfg = {"characteristic": default}
    if not isinstance(cfg, dict) or "characteristic" not in cfg:
        raise ValidationError("field must be {characteristic: 0 or a prime}", "/field")
    p = cfg["characteristic"]
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValidationError("characteristic must be an integer", "/field/characteristic")
    try:
        return field_for(p)
    except ValueError as exc:
        raise ValidationError(str(exc), "/field/characteristic") from exc


def parse_command(cfg) -> tuple[str, dict]:
    if isinstance(cfg, str):
        name, args = cfg, {}
    elif isinstance(cfg, dict) and len(cfg) == 1:
        (name, args), = cfg.items()
        if args is None:
            args = {}
        if not isinstance(args, dict):
            raise ValidationError("command arguments must be an object", f"/command/{name}")
    else:
        raise ValidationError("command must be a name or {name: {arguments}}", "/command")
    if name not in COMMANDS:
        raise ValidationError(f"unknown command {name!r}; expected one of {', '.join(COMMANDS)}", "/command")
    if name == "hh":
        d = args.get("degree")
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise ValidationError("degree must be a non-negative integer", "/command/hh/degree")
    if name == "kunneth":
        d = args.get("degree")
        if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d <= 3:
            raise ValidationError("degree must be an integer between 0 and 3", "/command/kunneth/degree")
        if "r" not in args:
            raise ValidationError("missing structure algebra r", "/command/kunneth/r")
    if name == "inflate" and "r" not in args:
        raise ValidationError("missing structure algebra r", "/command/inflate/r")
    return name, args


def _check_builtin_backend(name: str, cat: BackendCategory) -> None:
    expected = backend_config(name)
    if "graded" in expected:
        table = expected["graded"]["group_table"]
        if not isinstance(cat, GradedCategory) or cat.group.table != table:
            raise ValidationError(f"{name} lives in Vec_G for the cyclic group of order {len(table)}", "/backend")
    else:
        if not isinstance(cat, BimoduleCategory) or cat.algebra.c != dual_numbers(cat.field).c:
            raise ValidationError(f"{name} lives in the bimodule category of the dual numbers", "/backend")


def parse_config(cfg) -> RunConfig:
    if not isinstance(cfg, dict):
        raise ValidationError("the configuration must be a JSON object", "")
    unknown = set(cfg) - {"field", "backend", "algebra", "command", "output"}
    if unknown:
        raise ValidationError(f"unknown keys {sorted(unknown)}", "")
    alg_cfg = cfg.get("algebra")
    if not isinstance(alg_cfg, dict) or len(alg_cfg) != 1 or next(iter(alg_cfg)) not in ("builtin", "explicit"):
        raise ValidationError("algebra must be {builtin: name} or {explicit: {...}}", "/algebra")
    builtin = alg_cfg.get("builtin")
    if builtin is not None and builtin not in ENTRIES:
        raise ValidationError(f"unknown builtin {builtin!r}; see 'hochcat catalog'", "/algebra/builtin")
    default_p = ENTRIES[builtin].default_characteristic if builtin else 0
    F = parse_field(cfg.get("field"), default_p)
    backend = cfg.get("backend")
    if backend is None:
        if builtin is None:
            raise ValidationError("an explicit algebra needs a backend", "/backend")
        backend = backend_config(builtin)
    cat = build_backend(backend, F)
    name, args = parse_command(cfg.get("command"))
    out = cfg.get("output") or {}
    if not isinstance(out, dict):
        raise ValidationError("output must be an object", "/output")
    fmt = out.get("format", "json")
    if fmt not in ("json", "text"):
        raise ValidationError("format must be json or text", "/output/format")
    emit = out.get("emit_basis", False)
    if not isinstance(emit, bool):
        raise ValidationError("emit_basis must be a boolean", "/output/emit_basis")
    if builtin is not None:
        _check_builtin_backend(builtin, cat)
        alg = build_builtin(builtin, cat)
        alg_id = builtin
    else:
        try:
            alg = algebra_from_json(alg_cfg["explicit"], cat)
        except ValueError as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(str(exc), "/algebra/explicit") from exc
        alg_id = alg.name
    if name != "check":
        rep = check_axioms(alg)
        if not rep.passed:
            raise ValidationError("axioms fail: " + ", ".join(rep.failures), "/algebra")
    return RunConfig(F, cat, alg, alg_id, name, args, fmt, emit)

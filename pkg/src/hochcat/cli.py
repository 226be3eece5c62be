"""Command line front end.

    hochcat run <config.json> [--format json|text] [--emit-basis] [--max-degree N]
    hochcat catalog
    hochcat selftest

``run`` prints one JSON document (or a text rendering) and exits with 0 on
success, 1 on a validation error and 2 when an internal invariant fails.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra_object import TwoCochain, check_axioms, deform, inflate, separability
from .catalog import algebra_to_json, catalog, morphism_from_json, morphism_to_json, parse_structure_algebra
from .config import RunConfig, parse_config
from .errors import HochError
from .freyd import ext_dim
from .hochschild import DEFAULT_MAX_DEGREE, hh0, hh1, hh2, hh_via_resolution, kunneth_check
from .monoidal_backend import compose, tensor_obj

USER_ERRORS = ("INVALID", "NO-COCYCLE", "DEPTH-EXCEEDED")


def field_name(F) -> str:
    return f"F{F.characteristic}" if F.characteristic else "Q"


def _basis_json(b):
    if isinstance(b, TwoCochain):
        return {"g0": morphism_to_json(b.g0), "g1": morphism_to_json(b.g1)}
    return morphism_to_json(b)


def _checks(d: dict) -> list[dict]:
    return [{"name": k, "passed": bool(v)} for k, v in d.items()]


def _hh_report(rep: dict, res, cfg: RunConfig) -> None:
    rep["degree"] = res.degree
    rep["dim"] = res.dim
    if cfg.emit_basis:
        rep["basis"] = [_basis_json(b) for b in res.basis]
    rep["checks"] = _checks(res.checks)


def execute(cfg: RunConfig, max_degree: int = DEFAULT_MAX_DEGREE) -> dict:
    alg = cfg.algebra
    rep = {"command": cfg.command, "field": field_name(cfg.field), "algebra_id": cfg.algebra_id}
    cmd, args = cfg.command, cfg.args
    if cmd == "check":
        ax = check_axioms(alg)
        rep["A0"] = list(alg.A0.summands)
        rep["A1"] = list(alg.A1.summands)
        rep["checks"] = _checks(ax.checks)
    elif cmd in ("hh0", "hh1", "hh2"):
        _hh_report(rep, {"hh0": hh0, "hh1": hh1, "hh2": hh2}[cmd](alg), cfg)
    elif cmd == "hh":
        res = hh_via_resolution(alg, args["degree"], max_degree=max_degree)
        _hh_report(rep, res, cfg)
        rep["generators"] = res.info.get("generators", [])
    elif cmd == "separable":
        sep = separability(alg)
        rep["separable"] = sep.separable
        checks = {}
        if sep.separable:
            rep["witnesses"] = {"e0": morphism_to_json(sep.e0), "s0": morphism_to_json(sep.s.f0)}
            checks["mu s = id"] = alg.a_obj.is_null(compose(alg.mu0, sep.s.f0) - alg.id0())
            checks["s descends"] = sep.s.is_valid()
        rep["checks"] = _checks(checks)
    elif cmd == "inflate":
        r = parse_structure_algebra(args["r"], cfg.field, "/command/inflate/r")
        try:
            big = inflate(alg, r)
        except ValueError as exc:
            raise HochError("INVALID", f"/command/inflate/r: {exc}") from exc
        rep["dims"] = {"hh0": hh0(big).dim, "hh1": hh1(big).dim, "hh2": hh2(big).dim}
        if cfg.emit_basis:
            rep["witnesses"] = {"algebra": algebra_to_json(big)}
        rep["checks"] = _checks(check_axioms(big).checks)
    elif cmd == "deform":
        AA0 = tensor_obj(alg.A0, alg.A0)[0]
        g0 = morphism_from_json(args.get("g0"), AA0, alg.A0, "/command/deform/g0")
        g1 = morphism_from_json(args.get("g1"), alg.A1, alg.A0, "/command/deform/g1")
        d = deform(alg, TwoCochain(g0, g1))
        rep["witnesses"] = {"h01": morphism_to_json(d.h01), "h10": morphism_to_json(d.h10),
                            "eta1": morphism_to_json(d.eta1)}
        if cfg.emit_basis:
            rep["witnesses"]["algebra"] = algebra_to_json(d.algebra)
        # the unit of the deformation is only a candidate, so unitality is advisory
        rep["checks"] = _checks({k: v for k, v in d.report.checks.items() if "unitality" not in k})
        rep["advisory"] = _checks({f"{k} of the candidate unit": v for k, v in d.report.checks.items()
                                   if "unitality" in k})
    elif cmd == "ext1":
        rep["degree"] = 1
        rep["dim"] = ext_dim(alg.a_obj, alg.a_obj, 1)
        rep["checks"] = []
    elif cmd == "kunneth":
        r = parse_structure_algebra(args["r"], cfg.field, "/command/kunneth/r")
        k = kunneth_check(alg, r, args["degree"])
        rep["degree"] = k.degree
        rep["left"] = k.left
        rep["right"] = k.right
        rep["terms"] = [{"i": i, "hh_alg": x, "hh_r": y} for i, x, y in k.terms]
        rep["checks"] = _checks({"kunneth": k.passed})
    return rep


def run(config: dict, emit_basis: bool | None = None, fmt: str | None = None,
        max_degree: int = DEFAULT_MAX_DEGREE) -> tuple[int, dict]:
    """Validate and execute one configuration.  Returns (status, report)."""
    command = config.get("command") if isinstance(config, dict) else None
    head = command if isinstance(command, str) else (next(iter(command)) if isinstance(command, dict) and command else None)
    try:
        cfg = parse_config(config)
        if emit_basis is not None:
            cfg.emit_basis = emit_basis
        if fmt is not None:
            cfg.format = fmt
        rep = execute(cfg, max_degree)
    except HochError as exc:
        status = 1 if exc.code in USER_ERRORS else 2
        return status, {"command": head, "error": {"code": exc.code, "message": str(exc)}}
    failed = [c["name"] for c in rep.get("checks", []) if not c["passed"]]
    if failed:
        return (1 if cfg.command == "check" else 2), rep
    return 0, rep


def render_text(rep: dict) -> str:
    lines = []
    for key, val in rep.items():
        if key in ("checks", "advisory"):
            for c in val:
                lines.append(f"{key[:-1] if key == 'checks' else key} {c['name']}: {'ok' if c['passed'] else 'FAILED'}")
        elif key in ("basis", "witnesses", "terms"):
            lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
        elif isinstance(val, dict):
            lines.append(f"{key}: " + ", ".join(f"{k}={v}" for k, v in val.items()))
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


def _cmd_run(ns) -> int:
    try:
        with open(ns.config) as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": {"code": "INVALID", "message": str(exc)}}))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if ns.max_degree is not None and ns.max_degree > DEFAULT_MAX_DEGREE:
        print(f"warning: degree bound {ns.max_degree} is above {DEFAULT_MAX_DEGREE}; "
              "resolutions grow quickly", file=sys.stderr)
    out = config.get("output", {}) if isinstance(config, dict) else {}
    fmt = ns.format or (out.get("format") if isinstance(out, dict) else None) or "json"
    emit = True if ns.emit_basis else None
    status, rep = run(config, emit, fmt if fmt in ("json", "text") else None,
                      ns.max_degree if ns.max_degree is not None else DEFAULT_MAX_DEGREE)
    if "error" in rep:
        print(rep["error"]["message"], file=sys.stderr)
    print(render_text(rep) if fmt == "text" else json.dumps(rep, indent=2))
    return status


def _cmd_catalog(ns) -> int:
    entries = catalog()
    if ns.format == "text":
        for e in entries:
            print(f"{e['name']:22s} char {e['default_characteristic']}  {e['description']}")
    else:
        print(json.dumps(entries, indent=2))
    return 0


def _cmd_selftest(ns) -> int:
    from .selftest import run_selftest
    return run_selftest(quick=ns.quick)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="hochcat", description="Hochschild cohomology of algebra objects")
    sub = ap.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("run", help="run one configuration")
    p.add_argument("config")
    p.add_argument("--format", choices=["json", "text"])
    p.add_argument("--emit-basis", action="store_true")
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=_cmd_run)
    p = sub.add_parser("catalog", help="list builtin algebras")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_catalog)
    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--quick", action="store_true", help="fewer random trials and catalog entries")
    p.set_defaults(func=_cmd_selftest)
    ns = ap.parse_args(argv)
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())

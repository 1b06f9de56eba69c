"""Command-line interface.

Exit codes: 0 success or positive verdict, 1 negative verdict on
well-formed input, 2 input error. Reports go to stdout as JSON with sorted
keys; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import constructions as con
from .category import is_isomorphism, principal_bundle_check, validate_morphism
from .documents import (DocumentError, dumps, fraction_str, gaussian_quad, load_json,
                        parse_admissibility, parse_gaussian, parse_morphism, parse_triple,
                        triple_document)
from .errors import ParityViolation, SizeViolation, TorusFanError
from .exact.gaussian import I
from .oracles import direction_oracle, fan_overlap_oracle
from .polyhedral import Fan
from .triple import (Triple, ValidationReport, hert, kaehler_obstruction, product_decomposition,
                     quotient_fan, validate_c2)


class InputError(Exception):
    pass


def _checks(checks) -> dict:
    return {name: {"ok": c.ok, "witness": c.witness} for name, c in checks.items()}


def _fan_dict(fan: Fan) -> dict:
    return {
        "ambient_rank": fan.ambient_rank,
        "rays": [[fraction_str(x) for x in r] for r in fan.rays],
        "maximal_simplices": [sorted(s) for s in fan.maximal_simplices()],
    }


def _hert_table(T: Triple) -> list:
    return [{"simplex": sorted(s), "hert": list(hert(T, s))} for s in T.fan.sorted_simplices()]


def _invariants(T: Triple, rep: ValidationReport) -> dict:
    k = kaehler_obstruction(T)
    out = {
        "n": T.complex_dim,
        "m": T.torus_rank,
        "quotient_dim": T.quotient_dim,
        "minimal_orbit_count": len(T.minimal_orbits()) if rep.valid else None,
        "kaehler": {"passes": k.passes, "dim_f": k.dim_f, "required": k.required},
        "hert": _hert_table(T) if rep.valid else None,
    }
    return out


def _load_triple(path: str) -> Triple:
    return parse_triple(load_json(path), path)


def cmd_validate(args) -> tuple[int, dict]:
    T = _load_triple(args.file)
    rep = validate_c2(T)
    report = {
        "command": "validate",
        "valid": rep.valid,
        "checks": _checks(rep.checks),
        "fan": rep.fan_report.as_dict(),
        "warnings": rep.warnings,
        "invariants": _invariants(T, rep),
    }
    code = 0 if rep.valid else 1
    if args.oracle:
        oracle = {"seed": args.seed}
        agree = True
        overlap = fan_overlap_oracle(T.fan, seed=args.seed)
        oracle["fan_overlap_witness"] = None if overlap is None else [sorted(overlap[0]), sorted(overlap[1])]
        agree &= (overlap is None) == rep.fan_report.fan_property
        if rep.checks["condition_1"].ok and rep.checks["fan"].ok and T.quotient_dim >= 0:
            qf = quotient_fan(T).fan
            covered = direction_oracle(qf, seed=args.seed)
            oracle["quotient_directions_covered"] = covered
            if rep.checks["quotient_cones_independent"].ok and rep.checks["quotient_cones_distinct"].ok:
                q_overlap = fan_overlap_oracle(qf, seed=args.seed)
                oracle["quotient_overlap_witness"] = (
                    None if q_overlap is None else [sorted(q_overlap[0]), sorted(q_overlap[1])])
                agree &= (q_overlap is None) == rep.checks["quotient_fan_property"].ok
                if q_overlap is None:
                    agree &= covered == rep.checks["quotient_complete"].ok
        oracle["agrees"] = agree
        report["oracle"] = oracle
        if not agree:
            print("oracle disagrees with the exact checks", file=sys.stderr)
            code = 1
    return code, report


def cmd_invariants(args):
    T = _load_triple(args.file)
    rep = validate_c2(T)
    return (0 if rep.valid else 1), {"command": "invariants", "valid": rep.valid, **_invariants(T, rep)}


def cmd_quotient(args):
    T = _load_triple(args.file)
    rep = validate_c2(T)
    if not rep.checks["condition_1"].ok:
        return 1, {"command": "quotient", "condition_1": False, "quotient": None}
    Q = quotient_fan(T)
    return (0 if rep.valid else 1), {
        "command": "quotient",
        "condition_1": True,
        "valid": rep.valid,
        "quotient": {
            "quotient_dim": Q.quotient_dim,
            "projection_matrix": [[fraction_str(x) for x in row] for row in Q.projection_matrix],
            "fan": _fan_dict(Q.fan),
        },
    }


def cmd_kaehler(args):
    T = _load_triple(args.file)
    k = kaehler_obstruction(T)
    return (0 if k.passes else 1), {"command": "kaehler", "passes": k.passes,
                                    "dim_f": k.dim_f, "required": k.required}


def cmd_decompose(args):
    T = _load_triple(args.file)
    k = kaehler_obstruction(T)
    if not k.passes:
        return 1, {"command": "decompose", "decomposition": None,
                   "reason": f"dim f = {k.dim_f} but 2n - m = {k.required}"}
    D = product_decomposition(T)
    return 0, {
        "command": "decompose",
        "decomposition": {
            "fiber_fan": _fan_dict(D.fiber_fan),
            "base_rank": D.base_rank,
            "base_h_basis": [[gaussian_quad(x) for x in w] for w in D.base_h_basis],
            "fiber_lattice_basis": [list(v) for v in D.fiber_lattice_basis],
            "base_lattice_basis": [list(v) for v in D.base_lattice_basis],
        },
    }


def cmd_lift(args):
    T = _load_triple(args.file)
    if not validate_c2(T).valid:
        return 1, {"command": "lift", "lift": None, "reason": "input triple is not valid"}
    try:
        L = con.moment_angle_lift(T, args.m)
    except (ParityViolation, SizeViolation) as e:
        raise InputError(f"--m: {e}") from None
    P = principal_bundle_check(L.alpha)
    return 0, {
        "command": "lift",
        "lift": {
            "lifted": triple_document(L.lifted),
            "alpha": L.alpha.matrix,
            "ghost_vertices": sorted(L.ghost_vertices),
            "kernel_dim": P.kernel_dim,
            "kernel_component_divisors": list(P.kernel_component_divisors),
        },
    }


def _load_morphism(path):
    return parse_morphism(load_json(path), path)


def cmd_morphism(args):
    M = _load_morphism(args.file)
    rep = validate_morphism(M)
    out = {"command": "morphism", "valid": rep.valid, "checks": _checks(rep.checks),
           "is_isomorphism": is_isomorphism(M) if rep.valid else False}
    return (0 if rep.valid else 1), out


def cmd_principal(args):
    M = _load_morphism(args.file)
    rep = validate_morphism(M)
    if not rep.valid:
        return 1, {"command": "principal", "valid": False, "checks": _checks(rep.checks), "principal": None}
    P = principal_bundle_check(M)
    return (0 if P.is_principal else 1), {
        "command": "principal",
        "valid": True,
        "checks": _checks(rep.checks),
        "principal": {"is_principal": P.is_principal, "kernel_dim": P.kernel_dim,
                      "kernel_component_divisors": list(P.kernel_component_divisors),
                      "reason": P.reason},
    }


def cmd_admissibility(args):
    q = parse_admissibility(load_json(args.file), args.file)
    r = con.moment_angle_admissibility(q["simplices"], q["m"], q["rays"], q["d"])
    return (0 if r.admissible else 1), {
        "command": "admissibility", "parity_ok": r.parity_ok,
        "realization_complete": r.realization_complete,
        "underlying_matches": r.underlying_matches, "admissible": r.admissible,
    }


EXAMPLES = ("torus", "hopf", "calabi_eckmann", "complete_toric_p1", "complete_toric_p1xp1")


def emit_example(name: str, k: int | None = None, m: int | None = None, n: int | None = None,
                 alpha=None, periods=None) -> dict:
    """Triple document for a named gallery example."""
    if name == "calabi_eckmann":
        return triple_document(con.make_calabi_eckmann(k if k is not None else 2,
                                                       m if m is not None else 4,
                                                       alpha if alpha is not None else I))
    if name == "hopf":
        return triple_document(con.make_hopf(n if n is not None else 2, alpha if alpha is not None else I))
    if name == "torus":
        n = n if n is not None else 1
        if periods is None:
            if n != 1:
                raise InputError("--periods is required for n > 1")
            periods = [[1, I]]
        return triple_document(con.make_torus(n, periods))
    if name == "complete_toric_p1":
        return triple_document(con.p1_triple())
    if name == "complete_toric_p1xp1":
        return triple_document(con.p1xp1_triple())
    raise InputError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")


def cmd_example(args):
    alpha = parse_gaussian(args.alpha, "--alpha", "alpha") if args.alpha is not None else None
    periods = None
    if args.periods is not None:
        try:
            raw = json.loads(args.periods)
        except json.JSONDecodeError as e:
            raise InputError(f"--periods: {e.msg}") from None
        if not isinstance(raw, list):
            raise InputError("--periods: expected a matrix of quadruples")
        periods = [[parse_gaussian(q, "--periods", f"[{i}][{j}]") for j, q in enumerate(row)]
                   for i, row in enumerate(raw)]
    try:
        return 0, emit_example(args.name, args.k, args.m, args.n, alpha, periods)
    except (TorusFanError, ValueError) as e:
        raise InputError(f"{args.name}: {e}") from None


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "quotient": cmd_quotient,
    "kaehler": cmd_kaehler,
    "decompose": cmd_decompose,
    "lift": cmd_lift,
    "morphism": cmd_morphism,
    "principal": cmd_principal,
    "example": cmd_example,
    "admissibility": cmd_admissibility,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torusfan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("validate", "invariants", "quotient", "kaehler", "decompose", "morphism",
                 "principal", "admissibility"):
        p = sub.add_parser(name)
        p.add_argument("file")
        if name == "validate":
            p.add_argument("--oracle", action="store_true", help="cross-check with sampling oracles")
            p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("lift")
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True, help="rank of the moment-angle torus")
    p = sub.add_parser("example")
    p.add_argument("name")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=int, nargs=4, metavar=("RE_NUM", "RE_DEN", "IM_NUM", "IM_DEN"))
    p.add_argument("--periods", help="JSON n x 2n matrix of quadruples")
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        code, report = COMMANDS[args.command](args)
    except (DocumentError, InputError) as e:
        print(f"error: {e}", file=stderr)
        return 2
    except TorusFanError as e:
        print(f"error: {e}", file=stderr)
        return 1
    stdout.write(dumps(report))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary.
"""

import io
import json
import random

from conftest import record
from fan_suite import COMPLETENESS_SUITE, OVERLAP_SUITE
from test_exact_core import check_snf
from torusfan.category import Morphism, is_isomorphism, principal_bundle_check, validate_morphism
from torusfan.cli import EXAMPLES, emit_example, run
from torusfan.constructions import (admissible_lift_sizes, gallery, lift_postconditions,
                                    make_calabi_eckmann, make_hopf, moment_angle_lift, p1_fan,
                                    p1_times_elliptic, p1_triple)
from torusfan.documents import morphism_document, parse_triple, triple_document
from torusfan.exact import I
from torusfan.oracles import direction_oracle, fan_overlap_oracle
from torusfan.polyhedral import Fan, join_fans, validate_fan
from torusfan.triple import (hert, kaehler_obstruction, product_decomposition, quotient_fan,
                             validate_c2)


def test_criterion_01_calabi_eckmann_quotient():
    ce = make_calabi_eckmann(2, 4, I)
    valid = validate_c2(ce).valid
    qf = quotient_fan(ce).fan
    rays = set(qf.rays)
    half_axes = rays == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    target = join_fans(p1_fan(), p1_fan())
    pos = {r: j for j, r in enumerate(target.rays)}
    same = half_axes and frozenset(frozenset(pos[qf.rays[i]] for i in s) for s in qf.simplices) == target.simplices
    ok = valid and half_axes and same and len(qf.rays) == 4 and len(qf.maximal_simplices()) == 4
    record(1, ok, f"valid={valid} rays={sorted(rays)} cones={len(qf.maximal_simplices())}")
    assert ok


def test_criterion_02_kaehler_verdicts():
    g = gallery()
    passing = all(kaehler_obstruction(g[n]).passes for n in ("torus", "complete_toric_p1", "complete_toric_p1xp1"))
    ce = kaehler_obstruction(make_calabi_eckmann(2, 4))
    hopf = kaehler_obstruction(make_hopf(2))
    ok = (passing and not ce.passes and not hopf.passes
          and ce.dim_f - ce.required == 2 and hopf.dim_f - hopf.required == 1)
    record(2, ok, f"CE diff={ce.dim_f - ce.required} Hopf diff={hopf.dim_f - hopf.required}")
    assert ok


def test_criterion_03_completeness_vs_direction_oracle():
    dims = {fan.ambient_rank for _, fan, _ in COMPLETENESS_SUITE}
    disagree = []
    for k, (name, fan, _) in enumerate(COMPLETENESS_SUITE):
        if validate_fan(fan).complete != direction_oracle(fan, samples=1000, seed=k):
            disagree.append(name)
    ok = len(COMPLETENESS_SUITE) >= 20 and dims == {0, 1, 2, 3, 4} and not disagree
    record(3, ok, f"{len(COMPLETENESS_SUITE)} fans, disagreements={disagree}")
    assert ok


def test_criterion_04_fan_property_vs_overlap_oracle():
    names = [n for n, _, _ in OVERLAP_SUITE]
    disagree = []
    for k, (name, fan, _) in enumerate(OVERLAP_SUITE):
        exact = validate_fan(fan, lattice=False).fan_property
        if exact != (fan_overlap_oracle(fan, samples=1000, seed=k) is None):
            disagree.append(name)
    ok = len(OVERLAP_SUITE) >= 20 and "diagonal_overlap" in names and not disagree
    record(4, ok, f"{len(OVERLAP_SUITE)} candidates, disagreements={disagree}")
    assert ok


def test_criterion_05_snf_algebra():
    rng = random.Random(5)
    violations = 0
    for _ in range(200):
        A = [[rng.randint(-20, 20) for _ in range(rng.randint(1, 6))]]
        A += [[rng.randint(-20, 20) for _ in range(len(A[0]))] for _ in range(rng.randint(0, 5))]
        try:
            check_snf(A)
        except AssertionError:
            violations += 1
    record(5, violations == 0, f"200 matrices, violations={violations}")
    assert violations == 0


def test_criterion_06_hert_identities():
    bad = []
    for name, T in gallery().items():
        n, m = T.complex_dim, T.torus_rank
        maximal = set(T.fan.maximal_simplices())
        for s in T.fan.simplices:
            h, e, r, t = hert(T, s)
            if h != 0 or e + t != m or r + t != 2 * n - 2 * e:
                bad.append((name, sorted(s)))
            if (r == 0) != (s in maximal and len(s) == 2 * n - m):
                bad.append((name, sorted(s), "r"))
    record(6, not bad, f"violations={bad}")
    assert not bad


def test_criterion_07_lift_suite():
    failures, runs = [], 0
    for name, T in gallery().items():
        for m in admissible_lift_sizes(T, len(T.fan.rays) + 3):
            L = moment_angle_lift(T, m, check=False)
            runs += 1
            failed = lift_postconditions(L, T)
            if failed:
                failures.append((name, m, failed))
    kdim = principal_bundle_check(moment_angle_lift(p1_triple(), 3).alpha).kernel_dim
    ok = runs > 0 and not failures and kdim == 2
    record(7, ok, f"{runs} lifts, failures={failures}, P1 m=3 kernel_dim={kdim}")
    assert ok


def test_criterion_08_isomorphism_detection():
    ce = make_calabi_eckmann(2, 4)
    swap = Morphism(ce, ce, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    swap_iso = is_isomorphism(swap)
    L = moment_angle_lift(p1_triple(), 3)
    lift_ok = (L.alpha.matrix == [[1, -1, 0]] and principal_bundle_check(L.alpha).is_principal
               and not is_isomorphism(L.alpha))
    doubled = Morphism(L.lifted, p1_triple(), [[2, -2, 0]])
    doubled_ok = validate_morphism(doubled).valid and not principal_bundle_check(doubled).is_principal
    ok = swap_iso and lift_ok and doubled_ok
    record(8, ok, f"swap iso={swap_iso} lift={lift_ok} doubled={doubled_ok}")
    assert ok


def test_criterion_09_decomposition():
    T = p1_times_elliptic()
    D = product_decomposition(T)
    fiber = D.fiber_fan
    fiber_ok = (fiber.ambient_rank == 1 and sorted(fiber.rays) == [(-1,), (1,)]
                and validate_fan(fiber).complete)
    ok = fiber_ok and D.base_rank == 2 and D.recombine() == T.fan
    record(9, ok, f"fiber rays={sorted(fiber.rays)} base_rank={D.base_rank}")
    assert ok


def _call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue()


def test_criterion_10_cli_contract(tmp_path):
    problems = []
    fixtures = {name: parse_triple(emit_example(name)) for name in EXAMPLES}
    fixtures["p1_times_elliptic"] = p1_times_elliptic()
    expected_kaehler = {"torus": 0, "hopf": 1, "calabi_eckmann": 1, "complete_toric_p1": 0,
                        "complete_toric_p1xp1": 0, "p1_times_elliptic": 0}
    for name, T in fixtures.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(triple_document(T)))
        if parse_triple(json.loads(path.read_text())) != T:
            problems.append((name, "roundtrip"))
        for cmd in ("validate", "invariants", "quotient", "kaehler", "decompose"):
            first, second = _call([cmd, path]), _call([cmd, path])
            if first != second:
                problems.append((name, cmd, "unstable"))
            if cmd == "validate" and first[0] != 0:
                problems.append((name, cmd, first[0]))
            if cmd == "kaehler" and first[0] != expected_kaehler[name]:
                problems.append((name, cmd, first[0]))
    for name in EXAMPLES:
        code, out = _call(["example", name])
        if code != 0 or parse_triple(json.loads(out)) != fixtures[name]:
            problems.append((name, "example"))
    L = moment_angle_lift(p1_triple(), 3)
    mpath = tmp_path / "alpha.json"
    mpath.write_text(json.dumps(morphism_document(L.alpha)))
    if _call(["principal", mpath])[0] != 0:
        problems.append(("alpha", "principal"))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"torus_rank": 1, "rays": [], "simplices": [], "h_basis": [[[1, 1, 0]]]}))
    if _call(["validate", bad])[0] != 2:
        problems.append(("quad", "exit"))
    if _call(["example", "nope"])[0] != 2:
        problems.append(("unknown example", "exit"))
    record(10, not problems, f"{len(fixtures)} fixtures, problems={problems}")
    assert not problems

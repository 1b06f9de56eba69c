import io
import json
import random
from fractions import Fraction

import pytest

from torusfan.cli import EXAMPLES, emit_example, run
from torusfan.constructions import moment_angle_lift, p1_triple
from torusfan.documents import dumps, morphism_document, parse_triple, triple_document
from torusfan.category import Morphism
from torusfan.exact import GaussianRational
from torusfan.polyhedral import Fan
from torusfan.triple import Triple


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return p


def random_triple(rng):
    m = rng.randint(1, 4)
    rays = [tuple(rng.randint(-2, 2) for _ in range(m)) for _ in range(rng.randint(0, 4))]
    top = [rng.sample(range(len(rays)), rng.randint(1, min(2, len(rays)))) for _ in range(rng.randint(0, 3))] if rays else []
    h = [tuple(GaussianRational(Fraction(rng.randint(-3, 3), rng.randint(1, 3)), rng.randint(-2, 2))
               for _ in range(m)) for _ in range(rng.randint(0, m // 2))]
    return Triple(m, Fan.from_maximal(m, rays, top), tuple(h))


def test_document_roundtrip_gallery(triples):
    for T in triples.values():
        assert parse_triple(json.loads(dumps(triple_document(T)))) == T


def test_document_roundtrip_random():
    rng = random.Random(42)
    for _ in range(100):
        T = random_triple(rng)
        assert parse_triple(json.loads(dumps(triple_document(T)))) == T


def test_random_triples_never_crash(tmp_path):
    rng = random.Random(9)
    for k in range(30):
        p = write(tmp_path, f"r{k}.json", triple_document(random_triple(rng)))
        for cmd in ("validate", "invariants", "quotient", "kaehler", "decompose"):
            code, out, err = call(cmd, p)
            assert code in (0, 1), (cmd, err)
            json.loads(out) if out else None


@pytest.mark.parametrize("name", EXAMPLES)
def test_example_roundtrip(tmp_path, name):
    code, out, _ = call("example", name)
    assert code == 0
    p = tmp_path / f"{name}.json"
    p.write_text(out)
    code, report, _ = call("validate", p)
    assert code == 0 and json.loads(report)["valid"]
    assert parse_triple(json.loads(out)) == parse_triple(emit_example(name))


def test_example_options():
    code, out, _ = call("example", "calabi_eckmann", "--k", 1, "--m", 3, "--alpha", 0, 1, 2, 1)
    assert code == 0
    assert json.loads(out)["h_basis"] == [[[1, 1, 0, 1], [0, 1, 2, 1], [0, 1, 2, 1]]]
    code, out, _ = call("example", "torus", "--n", 2, "--periods",
                        "[[[1,1,0,1],[0,1,0,1],[0,1,1,1],[1,1,0,1]],[[0,1,0,1],[1,1,0,1],[1,1,0,1],[0,1,2,1]]]")
    assert code == 0 and json.loads(out)["torus_rank"] == 4


def test_example_errors():
    assert call("example", "klein_bottle")[0] == 2
    assert call("example", "torus", "--n", 2)[0] == 2
    assert call("example", "calabi_eckmann", "--alpha", 1, 1, 0, 1)[0] == 2
    assert call("example", "torus", "--periods", "[[[1,1,0,1],[1,2,0,1]]]")[0] == 2


def test_verdict_exit_codes(tmp_path):
    ce = write(tmp_path, "ce.json", emit_example("calabi_eckmann"))
    p1 = write(tmp_path, "p1.json", emit_example("complete_toric_p1"))
    assert call("kaehler", ce)[0] == 1
    assert call("kaehler", p1)[0] == 0
    assert call("decompose", ce)[0] == 1
    assert call("decompose", p1)[0] == 0
    code, out, _ = call("quotient", ce)
    assert code == 0 and json.loads(out)["quotient"]["quotient_dim"] == 2


def test_invalid_triple_exit_one(tmp_path):
    doc = {"torus_rank": 2, "rays": [[1, 0], [0, 1], [1, 1]], "simplices": [[0, 1], [2]], "h_basis": []}
    p = write(tmp_path, "bad.json", doc)
    code, out, _ = call("validate", p)
    assert code == 1
    rep = json.loads(out)
    assert not rep["checks"]["fan"]["ok"] and rep["checks"]["fan"]["witness"]
    assert call("lift", p, "--m", 4)[0] == 1


def test_input_errors_exit_two(tmp_path):
    doc = {"torus_rank": 1, "rays": [], "simplices": [], "h_basis": [[[1, 1, 0]]]}
    code, _, err = call("validate", write(tmp_path, "q.json", doc))
    assert code == 2 and "h_basis[0][0]" in err
    assert call("validate", tmp_path / "missing.json")[0] == 2
    (tmp_path / "junk.json").write_text("{not json")
    assert call("validate", tmp_path / "junk.json")[0] == 2
    doc = {"torus_rank": 1, "rays": [[1]], "simplices": [[3]], "h_basis": []}
    assert call("validate", write(tmp_path, "idx.json", doc))[0] == 2
    assert call("frobnicate")[0] == 2
    assert call()[0] == 2


def test_lift_cli(tmp_path):
    p = write(tmp_path, "p1.json", emit_example("complete_toric_p1"))
    code, out, _ = call("lift", p, "--m", 3)
    rep = json.loads(out)["lift"]
    assert code == 0 and rep["alpha"] == [[1, -1, 0]] and rep["kernel_dim"] == 2
    assert rep["ghost_vertices"] == [2]
    assert call("lift", p, "--m", 4)[0] == 2


def test_morphism_and_principal_cli(tmp_path):
    L = moment_angle_lift(p1_triple(), 3)
    good = write(tmp_path, "a.json", morphism_document(L.alpha))
    doubled = write(tmp_path, "b.json", morphism_document(Morphism(L.lifted, p1_triple(), [[2, -2, 0]])))
    code, out, _ = call("morphism", good)
    assert code == 0 and json.loads(out)["is_isomorphism"] is False
    assert call("principal", good)[0] == 0
    code, out, _ = call("principal", doubled)
    assert code == 1 and json.loads(out)["principal"]["kernel_component_divisors"] == [2]
    bad = morphism_document(L.alpha)
    bad["matrix"] = [[1, 0]]
    assert call("morphism", write(tmp_path, "c.json", bad))[0] == 2


def test_admissibility_cli(tmp_path):
    doc = {"m": 4, "simplices": [[0, 1], [1, 2], [0, 2]], "rays": {"0": [1, 0], "1": [0, 1], "2": [-1, -1]}}
    code, out, _ = call("admissibility", write(tmp_path, "a.json", doc))
    assert code == 0 and json.loads(out)["admissible"]
    doc["m"] = 3
    assert call("admissibility", write(tmp_path, "b.json", doc))[0] == 1
    doc["rays"] = {"0": [1, 0]}
    assert call("admissibility", write(tmp_path, "c.json", doc))[0] == 2


def test_oracle_flag(tmp_path):
    p = write(tmp_path, "ce.json", emit_example("calabi_eckmann"))
    code, out, _ = call("validate", p, "--oracle", "--seed", 3)
    rep = json.loads(out)
    assert code == 0 and rep["oracle"]["agrees"] and rep["oracle"]["quotient_directions_covered"]


def test_reports_are_byte_stable(tmp_path, triples):
    for name, T in triples.items():
        p = write(tmp_path, f"{name}.json", triple_document(T))
        for cmd in ("validate", "invariants", "kaehler"):
            assert call(cmd, p) == call(cmd, p)

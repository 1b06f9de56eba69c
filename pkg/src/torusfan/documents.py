"""JSON documents for triples, morphisms and admissibility queries.

Gaussian rationals are written as integer quadruples
``[re_num, re_den, im_num, im_den]``; no floats appear anywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact.gaussian import GaussianRational
from .polyhedral import Fan, downward_closure


class DocumentError(ValueError):
    def __init__(self, source: str, fieldpath: str, message: str):
        self.source = source
        self.fieldpath = fieldpath
        super().__init__(f"{source}: {fieldpath}: {message}")


def _int(x, src, path) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(src, path, f"expected an integer, got {json.dumps(x)}")
    return x


def _list(x, src, path) -> list:
    if not isinstance(x, list):
        raise DocumentError(src, path, f"expected a list, got {type(x).__name__}")
    return x


def _require(doc: dict, key: str, src: str, prefix: str = ""):
    if not isinstance(doc, dict):
        raise DocumentError(src, prefix or "<root>", "expected an object")
    if key not in doc:
        raise DocumentError(src, prefix + key, "missing field")
    return doc[key]


def parse_gaussian(q, src: str, path: str) -> GaussianRational:
    q = _list(q, src, path)
    if len(q) != 4:
        raise DocumentError(src, path, f"expected [re_num, re_den, im_num, im_den], got {len(q)} numbers")
    a, b, c, d = (_int(x, src, f"{path}[{i}]") for i, x in enumerate(q))
    if b == 0 or d == 0:
        raise DocumentError(src, path, "zero denominator")
    return GaussianRational(Fraction(a, b), Fraction(c, d))


def parse_triple(doc: Any, src: str = "<input>", prefix: str = ""):
    from .triple import Triple
    m = _int(_require(doc, "torus_rank", src, prefix), src, prefix + "torus_rank")
    if m < 0:
        raise DocumentError(src, prefix + "torus_rank", "must be nonnegative")
    rays = []
    for i, r in enumerate(_list(_require(doc, "rays", src, prefix), src, prefix + "rays")):
        path = f"{prefix}rays[{i}]"
        r = _list(r, src, path)
        if len(r) != m:
            raise DocumentError(src, path, f"expected {m} entries, got {len(r)}")
        rays.append(tuple(_int(x, src, f"{path}[{j}]") for j, x in enumerate(r)))
    faces = []
    for i, s in enumerate(_list(_require(doc, "simplices", src, prefix), src, prefix + "simplices")):
        path = f"{prefix}simplices[{i}]"
        idx = [_int(x, src, f"{path}[{j}]") for j, x in enumerate(_list(s, src, path))]
        bad = [x for x in idx if not 0 <= x < len(rays)]
        if bad:
            raise DocumentError(src, path, f"ray index {bad[0]} out of range 0..{len(rays) - 1}")
        faces.append(idx)
    h = []
    for i, w in enumerate(_list(_require(doc, "h_basis", src, prefix), src, prefix + "h_basis")):
        path = f"{prefix}h_basis[{i}]"
        w = _list(w, src, path)
        if len(w) != m:
            raise DocumentError(src, path, f"expected {m} entries, got {len(w)}")
        h.append(tuple(parse_gaussian(q, src, f"{path}[{j}]") for j, q in enumerate(w)))
    return Triple(m, Fan(m, tuple(rays), downward_closure(faces)), tuple(h))


def gaussian_quad(x) -> list[int]:
    return GaussianRational.coerce(x).to_quad()


def triple_document(T) -> dict:
    return {
        "torus_rank": T.torus_rank,
        "rays": [[int(x) for x in r] for r in T.fan.rays],
        "simplices": [sorted(s) for s in T.fan.maximal_simplices() if s],
        "h_basis": [[gaussian_quad(x) for x in w] for w in T.h_basis],
    }


def parse_morphism(doc: Any, src: str = "<input>"):
    from .category import Morphism
    from .errors import ShapeMismatch
    source = parse_triple(_require(doc, "source", src), src, "source.")
    target = parse_triple(_require(doc, "target", src), src, "target.")
    rows = _list(_require(doc, "matrix", src), src, "matrix")
    A = []
    for i, row in enumerate(rows):
        path = f"matrix[{i}]"
        A.append([_int(x, src, f"{path}[{j}]") for j, x in enumerate(_list(row, src, path))])
    try:
        return Morphism(source, target, A)
    except ShapeMismatch as e:
        raise DocumentError(src, "matrix", str(e)) from None


def morphism_document(M) -> dict:
    return {
        "source": triple_document(M.source),
        "target": triple_document(M.target),
        "matrix": [list(r) for r in M.matrix],
    }


def parse_admissibility(doc: Any, src: str = "<input>") -> dict:
    m = _int(_require(doc, "m", src), src, "m")
    faces = []
    for i, s in enumerate(_list(_require(doc, "simplices", src), src, "simplices")):
        path = f"simplices[{i}]"
        idx = [_int(x, src, f"{path}[{j}]") for j, x in enumerate(_list(s, src, path))]
        bad = [x for x in idx if not 0 <= x < m]
        if bad:
            raise DocumentError(src, path, f"vertex {bad[0]} out of range 0..{m - 1}")
        faces.append(idx)
    raw = _require(doc, "rays", src)
    if not isinstance(raw, dict):
        raise DocumentError(src, "rays", "expected an object mapping vertex to ray")
    rays = {}
    for key, r in raw.items():
        path = f"rays[{key}]"
        try:
            v = int(key)
        except ValueError:
            raise DocumentError(src, path, "vertex keys must be integers") from None
        rays[v] = tuple(_int(x, src, f"{path}[{j}]") for j, x in enumerate(_list(r, src, path)))
    dims = {len(r) for r in rays.values()}
    if len(dims) > 1:
        raise DocumentError(src, "rays", "rays have different lengths")
    d = doc.get("d", dims.pop() if dims else 0)
    d = _int(d, src, "d")
    verts = {i for s in downward_closure(faces) for i in s}
    missing = sorted(verts - set(rays))
    if missing:
        raise DocumentError(src, "rays", f"no ray for vertex {missing[0]}")
    return {"simplices": faces, "m": m, "rays": rays, "d": d}


def load_json(path: str) -> Any:
    src = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(src, "<file>", e.strerror or str(e)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(src, f"line {e.lineno} column {e.colno}", e.msg) from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def fraction_str(x) -> str | int:
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

"""JSON encoding of matrices, quivers, categories, objects and results.

Encoders build dicts in a fixed key order and :func:`dumps` writes them
compactly, so equal inputs give byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .abcat import Category, NilMod, Vect
from .errors import ValidationError
from .linalg import GF, QQ, Field, Matrix
from .quiver import Arrow, Quiver
from .rep import RepCat, Representation, RepMorphism

__all__ = [
    "SCHEMA_VERSION",
    "dumps",
    "digest",
    "matrix_to_json",
    "matrix_from_json",
    "quiver_to_json",
    "quiver_from_json",
    "category_to_json",
    "category_from_json",
    "object_to_json",
    "object_from_json",
    "morphism_to_json",
    "morphism_from_json",
    "rep_to_json",
    "rep_from_json",
    "certificate_to_json",
    "certificate_from_json",
    "resolution_to_json",
]

SCHEMA_VERSION = 1


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def digest(obj) -> str:
    return hashlib.sha256(dumps(obj).encode()).hexdigest()[:16]


# matrices --------------------------------------------------------------------


def _entry(x, field: Field):
    if field.is_rational:
        return str(Fraction(x))
    return int(x)


def matrix_to_json(m: Matrix) -> dict:
    f = m.field
    out = {"field": "Q"} if f.is_rational else {"field": "Fp", "p": f.p}
    out.update(rows=m.rows, cols=m.cols, entries=[_entry(x, f) for x in m.array.reshape(-1)])
    return out


def _field_from(d: dict) -> Field:
    kind = d.get("field")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(d["p"]))
    raise ValidationError(f"unknown field tag {kind!r}")


def matrix_from_json(d: dict, field: Field | None = None) -> Matrix:
    try:
        f = _field_from(d)
        rows, cols, entries = int(d["rows"]), int(d["cols"]), d["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed matrix: {exc}") from None
    if field is not None and f != field:
        raise ValidationError(f"matrix over {f!r}, expected {field!r}")
    if entries and isinstance(entries[0], list):
        entries = [x for row in entries for x in row]
    if len(entries) != rows * cols:
        raise ValidationError("matrix entry count does not match its shape")
    vals = [Fraction(x) if f.is_rational else int(x) for x in entries]
    return Matrix.from_entries(f, rows, cols, vals)


# quivers and categories ----------------------------------------------------------


def quiver_to_json(q: Quiver) -> dict:
    return {"vertices": list(q.vertices), "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in q.arrows]}


def quiver_from_json(d: dict) -> Quiver:
    try:
        arrows = tuple(Arrow(str(a["id"]), str(a["src"]), str(a["tgt"])) for a in d.get("arrows", []))
        return Quiver(tuple(str(v) for v in d["vertices"]), arrows)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed quiver: {exc}") from None


def category_to_json(cat: Category) -> dict:
    if isinstance(cat, Vect):
        return {"kind": "Vect", "p": cat.field.p}
    if isinstance(cat, NilMod):
        return {"kind": "NilMod", "p": cat.field.p, "n": cat.n}
    if isinstance(cat, RepCat):
        return {"kind": "RepCat", "quiver": quiver_to_json(cat.quiver), "inner": category_to_json(cat.inner)}
    raise ValidationError(f"cannot encode {cat!r}")


def category_from_json(d: dict) -> Category:
    kind = d.get("kind")
    if kind in ("Vect", "NilMod"):
        p = int(d.get("p", 0))
        f = QQ if p == 0 else GF(p)
        return Vect(f) if kind == "Vect" else NilMod(f, int(d.get("n", 2)))
    if kind == "RepCat":
        return RepCat(quiver_from_json(d["quiver"]), category_from_json(d["inner"]))
    raise ValidationError(f"unknown category kind {kind!r}")


# objects and morphisms ---------------------------------------------------------


def object_to_json(x) -> dict:
    if isinstance(x, Representation):
        return rep_to_json(x)
    out = {"cat": category_to_json(x.category), "dim": x.dim}
    if x.action is not None:
        out["action"] = matrix_to_json(x.action)
    return out


def object_from_json(d: dict, cat: Category | None = None):
    if "quiver" in d:
        return rep_from_json(d)
    cat = cat or category_from_json(d["cat"])
    if isinstance(cat, Vect):
        return cat.obj(int(d["dim"]))
    if isinstance(cat, NilMod):
        if "action" not in d:
            raise ValidationError("module object needs an action")
        x = cat.obj(matrix_from_json(d["action"], cat.field))
        if x.dim != int(d.get("dim", x.dim)):
            raise ValidationError("stated dimension does not match the action")
        return x
    if isinstance(cat, RepCat):
        return rep_from_json(d)
    raise ValidationError(f"cannot decode objects of {cat!r}")


def morphism_to_json(f) -> dict:
    if isinstance(f, RepMorphism):
        return {
            "domain": rep_to_json(f.domain),
            "codomain": rep_to_json(f.codomain),
            "components": {v: matrix_to_json(c.matrix) for v, c in f.components.items()},
        }
    return {"domain": object_to_json(f.domain), "codomain": object_to_json(f.codomain), "matrix": matrix_to_json(f.matrix)}


def morphism_from_json(d: dict):
    dom, cod = object_from_json(d["domain"]), object_from_json(d["codomain"])
    if isinstance(dom, Representation):
        return _rep_morphism(dom, cod, d["components"])
    return dom.category.from_matrix(dom, cod, matrix_from_json(d["matrix"], dom.category.field))


def _rep_morphism(dom: Representation, cod: Representation, comps: dict, check: bool = True) -> RepMorphism:
    inner = dom.inner
    out = {}
    for v in dom.quiver.vertices:
        m = matrix_from_json(comps[v], inner.field)
        out[v] = inner.from_matrix(dom.at_vertex[v], cod.at_vertex[v], m, check=check)
    eta = RepMorphism(dom, cod, out)
    if check:
        dom.category.check_morphism(eta)
    return eta


# representations -----------------------------------------------------------------


def rep_to_json(F: Representation) -> dict:
    return {
        "quiver": quiver_to_json(F.quiver),
        "inner": category_to_json(F.inner),
        "vertices": {v: object_to_json(x) for v, x in F.at_vertex.items()},
        "arrows": {a: {"matrix": matrix_to_json(m.matrix)} for a, m in F.at_arrow.items()},
    }


def rep_from_json(d: dict) -> Representation:
    try:
        q = quiver_from_json(d["quiver"])
        inner = category_from_json(d["inner"])
        verts = {str(v): object_from_json(o, inner) for v, o in d.get("vertices", {}).items()}
        arrows = {}
        for a, m in d.get("arrows", {}).items():
            if "matrix" in m:
                m = m["matrix"]
            arrows[str(a)] = matrix_from_json(m, inner.field)
    except KeyError as exc:
        raise ValidationError(f"missing field {exc}") from None
    unknown = set(verts) - set(q.vertices)
    if unknown:
        raise ValidationError(f"objects given for unknown vertices {sorted(unknown)}")
    unknown = set(arrows) - {a.id for a in q.arrows}
    if unknown:
        raise ValidationError(f"maps given for unknown arrows {sorted(unknown)}")
    for a in q.arrows:
        if a.id in arrows:
            m = arrows[a.id]
            src, tgt = verts.get(a.src), verts.get(a.tgt)
            sd, td = (src.dim if src else 0), (tgt.dim if tgt else 0)
            if m.shape != (td, sd):
                raise ValidationError(f"arrow {a.id}: matrix shape {m.shape} does not match {td}x{sd}")
    return Representation(q, inner, verts, arrows)


# certificates and resolutions ------------------------------------------------------


def certificate_to_json(cert) -> dict:
    steps = []
    for i, (inc, st) in enumerate(zip(cert.chain, cert.steps)):
        steps.append(
            {
                "index": i,
                "vertex_set": list(st.vertex_set),
                "summands": [{"vertex": v, "object": object_to_json(x)} for v, x in st.summands],
                "subobject": rep_to_json(inc.domain),
                "inclusion": {v: matrix_to_json(c.matrix) for v, c in inc.components.items()},
                "quotient": rep_to_json(st.iso.domain),
                "iso": {v: matrix_to_json(c.matrix) for v, c in st.iso.components.items()},
                "iso_inverse": {v: matrix_to_json(c.matrix) for v, c in st.iso_inverse.components.items()},
            }
        )
    return {
        "version": SCHEMA_VERSION,
        "class": cert.cls,
        "target": rep_to_json(cert.target),
        "length": len(steps),
        "dims": [list(d) for d in cert.dims()],
        "steps": steps,
    }


def certificate_from_json(d: dict):
    """Rebuild a certificate without validating it (that is the verifier's job)."""
    from .adjoint import free_f
    from .filtration import FiltrationCertificate, FiltrationStep

    target = rep_from_json(d["target"])
    cat = target.category
    chain, steps = [], []
    for s in d["steps"]:
        sub = rep_from_json(s["subobject"])
        quot = rep_from_json(s["quotient"])
        summands = tuple((str(x["vertex"]), object_from_json(x["object"], target.inner)) for x in s["summands"])
        total = cat.direct_sum([free_f(v, X, target.quiver) for v, X in summands])
        chain.append(_rep_morphism(sub, target, s["inclusion"], check=False))
        iso = _rep_morphism(quot, total, s["iso"], check=False)
        inv = _rep_morphism(total, quot, s["iso_inverse"], check=False)
        steps.append(FiltrationStep(tuple(s["vertex_set"]), summands, iso, inv))
    return FiltrationCertificate(target, tuple(chain), tuple(steps), d.get("class", "all"))


def resolution_to_json(c, verdict=None) -> dict:
    def mat(f):
        if isinstance(f, RepMorphism):
            return {v: matrix_to_json(x.matrix) for v, x in f.components.items()}
        return matrix_to_json(f.matrix)

    out = {
        "version": SCHEMA_VERSION,
        "kind": c.kind,
        "period": c.period,
        "syzygy": object_to_json(c.syzygy),
        "embedding": mat(c.embedding),
        "objects": [object_to_json(o) for o in c.objects],
        "differentials": [mat(d) for d in c.differentials],
    }
    if verdict is not None:
        out["verdicts"] = verdict.to_dict()
    return out


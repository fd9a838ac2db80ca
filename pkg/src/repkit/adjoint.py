"""Evaluation ``e_v`` and its two adjoints ``f_v`` (left) and ``g_v`` (right).

``f_v(X)(w)`` is a sum of copies of ``X`` indexed by the paths ``v ⇝ w``;
an arrow ``a`` sends the copy of path ``p`` to the copy of ``a∘p``.
``g_v(X)(w)`` is a product indexed by the paths ``w ⇝ v``; an arrow
``a: w -> w'`` projects the copy of ``a∘p'`` onto the copy of ``p'``.
Path indices always follow :func:`repkit.quiver.enumerate_paths`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abcat import Category, hom_dimension
from .errors import InternalInconsistency
from .linalg import hstack
from .quiver import Quiver
from .rep import Representation, RepCat, RepMorphism

__all__ = [
    "AdjunctionReport",
    "eval_e",
    "eval_e_morphism",
    "free_f",
    "free_f_morphism",
    "cofree_g",
    "cofree_g_morphism",
    "path_index",
    "f_unit",
    "f_counit",
    "g_unit",
    "g_counit",
    "adjunction_audit",
]


def _inner_of(x) -> Category:
    return x.category


def eval_e(v, F: Representation):
    return F.at_vertex[F.quiver.check_vertex(v)]


def eval_e_morphism(v, eta: RepMorphism):
    return eta.components[eta.domain.quiver.check_vertex(v)]


def path_index(q: Quiver, v, forward: bool = True) -> dict[str, list[tuple[str, ...]]]:
    """Paths ``v ⇝ w`` (``forward``) or ``w ⇝ v`` for every vertex ``w``."""
    from .quiver import enumerate_paths

    v = q.check_vertex(v)
    return {w: enumerate_paths(q, v, w) if forward else enumerate_paths(q, w, v) for w in q.vertices}


def free_f(v, X, q: Quiver) -> Representation:
    inner = _inner_of(X)
    idx = path_index(q, v, forward=True)
    verts = {w: inner.direct_sum([X] * len(ps)) for w, ps in idx.items()}
    one = inner.identity(X)
    arrows = {}
    for a in q.arrows:
        src, tgt = idx[a.src], idx[a.tgt]
        pos = {p: i for i, p in enumerate(tgt)}
        blocks = [[None] * len(src) for _ in tgt]
        for j, p in enumerate(src):
            blocks[pos[p + (a.id,)]][j] = one
        arrows[a.id] = inner.block_morphism([X] * len(src), [X] * len(tgt), blocks)
    return Representation(q, inner, verts, arrows, check=False)


def free_f_morphism(v, h, q: Quiver) -> RepMorphism:
    inner = _inner_of(h.domain)
    idx = path_index(q, v, forward=True)
    comps = {}
    for w, ps in idx.items():
        k = len(ps)
        blocks = [[h if i == j else None for j in range(k)] for i in range(k)]
        comps[w] = inner.block_morphism([h.domain] * k, [h.codomain] * k, blocks)
    return RepMorphism(free_f(v, h.domain, q), free_f(v, h.codomain, q), comps)


def cofree_g(v, X, q: Quiver) -> Representation:
    inner = _inner_of(X)
    idx = path_index(q, v, forward=False)
    verts = {w: inner.direct_sum([X] * len(ps)) for w, ps in idx.items()}
    one = inner.identity(X)
    arrows = {}
    for a in q.arrows:
        src, tgt = idx[a.src], idx[a.tgt]
        pos = {p: j for j, p in enumerate(src)}
        blocks = [[None] * len(src) for _ in tgt]
        for i, p in enumerate(tgt):
            blocks[i][pos[(a.id,) + p]] = one
        arrows[a.id] = inner.block_morphism([X] * len(src), [X] * len(tgt), blocks)
    return Representation(q, inner, verts, arrows, check=False)


def cofree_g_morphism(v, h, q: Quiver) -> RepMorphism:
    inner = _inner_of(h.domain)
    idx = path_index(q, v, forward=False)
    comps = {}
    for w, ps in idx.items():
        k = len(ps)
        blocks = [[h if i == j else None for j in range(k)] for i in range(k)]
        comps[w] = inner.block_morphism([h.domain] * k, [h.codomain] * k, blocks)
    return RepMorphism(cofree_g(v, h.domain, q), cofree_g(v, h.codomain, q), comps)


def f_unit(v, X, q: Quiver):
    """``X -> e_v f_v X``: inclusion as the trivial-path coordinate."""
    inner = _inner_of(X)
    ps = path_index(q, v)[q.check_vertex(v)]
    one = inner.identity(X)
    return inner.block_morphism([X], [X] * len(ps), [[one if p == () else None] for p in ps])


def f_counit(v, F: Representation) -> RepMorphism:
    """``f_v e_v F -> F``: the copy of path ``p`` maps by ``F(p)``."""
    q, inner = F.quiver, F.inner
    v = q.check_vertex(v)
    X = F.at_vertex[v]
    idx = path_index(q, v)
    comps = {}
    for w, ps in idx.items():
        blocks = [[F.path_map(p, start=v) for p in ps]]
        comps[w] = inner.block_morphism([X] * len(ps), [F.at_vertex[w]], blocks)
    return RepMorphism(free_f(v, X, q), F, comps)


def g_unit(v, F: Representation) -> RepMorphism:
    """``F -> g_v e_v F``: the copy of path ``p: w ⇝ v`` receives ``F(p)``."""
    q, inner = F.quiver, F.inner
    v = q.check_vertex(v)
    X = F.at_vertex[v]
    idx = path_index(q, v, forward=False)
    comps = {}
    for w, ps in idx.items():
        blocks = [[F.path_map(p, start=w)] for p in ps]
        comps[w] = inner.block_morphism([F.at_vertex[w]], [X] * len(ps), blocks)
    return RepMorphism(F, cofree_g(v, X, q), comps)


def g_counit(v, X, q: Quiver):
    """``e_v g_v X -> X``: projection onto the trivial-path coordinate."""
    inner = _inner_of(X)
    ps = path_index(q, v, forward=False)[q.check_vertex(v)]
    one = inner.identity(X)
    return inner.block_morphism([X] * len(ps), [X], [[one if p == () else None for p in ps]])


@dataclass(frozen=True)
class AdjunctionReport:
    vertex: str
    hom_f_side: int  # dim Hom(f_v X, F)
    hom_e_side: int  # dim Hom(X, F(v))
    hom_e_dual_side: int  # dim Hom(F(v), X)
    hom_g_side: int  # dim Hom(F, g_v X)
    f_bijective: bool
    g_bijective: bool
    triangles: dict

    @property
    def ok(self) -> bool:
        return (
            self.hom_f_side == self.hom_e_side
            and self.hom_e_dual_side == self.hom_g_side
            and self.f_bijective
            and self.g_bijective
            and all(self.triangles.values())
        )

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "hom_f_side": self.hom_f_side,
            "hom_e_side": self.hom_e_side,
            "hom_e_dual_side": self.hom_e_dual_side,
            "hom_g_side": self.hom_g_side,
            "f_bijective": self.f_bijective,
            "g_bijective": self.g_bijective,
            "triangles": dict(self.triangles),
            "ok": self.ok,
        }


def _rank_of(maps, rows: int, field) -> int:
    if not maps:
        return 0
    return hstack(*[m.matrix.vec() for m in maps], rows=rows, field=field).rank()


def adjunction_audit(v, X, F: Representation) -> AdjunctionReport:
    """Check both adjunctions at ``(v, X, F)`` by dimensions, explicit transposes and triangles."""
    q, inner = F.quiver, F.inner
    v = q.check_vertex(v)
    field = inner.field
    Fv = F.at_vertex[v]
    fX, gX = free_f(v, X, q), cofree_g(v, X, q)
    cat = RepCat(q, inner)

    # Hom(f_v X, F) -> Hom(X, F(v)), eta |-> eta_v ∘ unit
    unit = f_unit(v, X, q)
    basis_f = cat.hom_basis(fX, F)
    images = [inner.compose(eta.components[v], unit) for eta in basis_f]
    hom_e = hom_dimension(X, Fv)
    f_bij = _rank_of(images, Fv.dim * X.dim, field) == len(basis_f) == hom_e

    # Hom(F, g_v X) -> Hom(F(v), X), eta |-> counit ∘ eta_v
    counit = g_counit(v, X, q)
    basis_g = cat.hom_basis(F, gX)
    images = [inner.compose(counit, eta.components[v]) for eta in basis_g]
    hom_ed = hom_dimension(Fv, X)
    g_bij = _rank_of(images, X.dim * Fv.dim, field) == len(basis_g) == hom_ed

    tri = {}
    # f ⊣ e: counit_{fX} ∘ f(unit_X) = id_{fX} and e(counit_F) ∘ unit_{eF} = id_{eF}
    lhs = cat.compose(f_counit(v, fX), free_f_morphism(v, unit, q))
    tri["f_left"] = lhs.matrix == cat.identity(fX).matrix
    lhs = inner.compose(f_counit(v, F).components[v], f_unit(v, Fv, q))
    tri["f_right"] = lhs.matrix == inner.identity(Fv).matrix
    # e ⊣ g: g(counit_X) ∘ unit_{gX} = id_{gX} and counit_{eF} ∘ e(unit_F) = id_{eF}
    lhs = cat.compose(cofree_g_morphism(v, counit, q), g_unit(v, gX))
    tri["g_left"] = lhs.matrix == cat.identity(gX).matrix
    lhs = inner.compose(g_counit(v, Fv, q), g_unit(v, F).components[v])
    tri["g_right"] = lhs.matrix == inner.identity(Fv).matrix

    report = AdjunctionReport(v, len(basis_f), hom_e, hom_ed, len(basis_g), f_bij, g_bij, tri)
    if not report.ok:
        raise InternalInconsistency(f"adjunction audit failed: {report.to_dict()}")
    return report


"""Representations of a finite acyclic quiver in a computable abelian category.

``RepCat(Q, A)`` is itself a :class:`~repkit.abcat.Category`, so it can be
nested (``RepCat(Q, RepCat(Q', Vect))``). Limits and colimits are computed
vertex by vertex; the underlying space of a representation is the direct
sum of its vertex spaces in vertex declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Mapping, Sequence

from .abcat import Category, KernelCokernel, NilMod, Vect, kernel_cokernel
from .errors import CapabilityMissing, InternalInconsistency, ValidationError
from .linalg import Matrix, _wrap, block_diag, kron, rank_and_kernel, solve_linear
from .quiver import Quiver, opposite

__all__ = [
    "MAX_NESTING_DEPTH",
    "RepCat",
    "Representation",
    "RepMorphism",
    "as_instance",
    "validate",
    "rep_hom_basis",
    "rep_kernel_cokernel",
    "rep_dualize",
]

MAX_NESTING_DEPTH = 2


class Representation:
    """Objects at vertices and morphisms along arrows.

    Paths act by composing arrow maps; there are no relations to check.
    """

    __slots__ = ("quiver", "inner", "at_vertex", "at_arrow", "__dict__")

    def __init__(self, quiver: Quiver, inner: Category, vertices: Mapping, arrows: Mapping | None = None, check: bool = True):
        verts = {str(k): v for k, v in vertices.items()}
        arrows = {str(k): v for k, v in (arrows or {}).items()}
        for v in quiver.vertices:
            verts.setdefault(v, inner.zero_object())
        amap = {}
        for a in quiver.arrows:
            src, tgt = verts.get(a.src), verts.get(a.tgt)
            m = arrows.get(a.id)
            if m is None:
                m = inner.zero_morphism(src, tgt)
            elif isinstance(m, Matrix):
                m = inner.from_matrix(src, tgt, m, check=check)
            amap[a.id] = m
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "at_vertex", MappingProxyType({v: verts[v] for v in quiver.vertices}))
        object.__setattr__(self, "at_arrow", MappingProxyType(amap))
        if check:
            problems = validate(self)
            if problems:
                raise ValidationError("; ".join(problems))

    def __setattr__(self, name, value):
        if name in Representation.__slots__[:4]:
            raise AttributeError("Representation is immutable")
        object.__setattr__(self, name, value)

    def __getitem__(self, v):
        return self.at_vertex[str(v)]

    @cached_property
    def category(self) -> "RepCat":
        return RepCat(self.quiver, self.inner)

    @cached_property
    def dim(self) -> int:
        return sum(x.dim for x in self.at_vertex.values())

    def dims(self) -> tuple[int, ...]:
        return tuple(self.at_vertex[v].dim for v in self.quiver.vertices)

    def arrow_map(self, arrow_id: str):
        return self.at_arrow[arrow_id]

    def path_map(self, path: Sequence[str], start=None):
        """Composite of arrow maps along ``path``; the identity of ``F(start)`` for the empty path."""
        if not path:
            return self.inner.identity(self.at_vertex[str(start)])
        out = self.at_arrow[path[0]]
        for a in path[1:]:
            out = self.inner.compose(self.at_arrow[a], out)
        return out

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.inner == other.inner
            and dict(self.at_vertex) == dict(other.at_vertex)
            and all(self.at_arrow[a].matrix == other.at_arrow[a].matrix for a in self.at_arrow)
        )

    def __hash__(self):
        return hash((self.quiver, self.inner, tuple(self.at_vertex.items())))

    def __repr__(self):
        return f"Representation<{self.inner!r}, dims={self.dims()}>"


class RepMorphism:
    """Vertex-indexed components ``η_v : F(v) -> G(v)``."""

    __slots__ = ("domain", "codomain", "components", "__dict__")

    def __init__(self, domain: Representation, codomain: Representation, components: Mapping):
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "components", MappingProxyType({str(k): v for k, v in components.items()}))

    def __setattr__(self, name, value):
        if name in RepMorphism.__slots__[:3]:
            raise AttributeError("RepMorphism is immutable")
        object.__setattr__(self, name, value)

    @property
    def category(self) -> "RepCat":
        return self.domain.category

    @cached_property
    def matrix(self) -> Matrix:
        q = self.domain.quiver
        return block_diag(*[self.components[v].matrix for v in q.vertices], field=self.domain.inner.field)

    def __getitem__(self, v):
        return self.components[str(v)]

    def __eq__(self, other):
        if not isinstance(other, RepMorphism):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"RepMorphism<{self.domain.dims()} -> {self.codomain.dims()}>"


def _depth(cat: Category) -> int:
    return 1 + _depth(cat.inner) if isinstance(cat, RepCat) else 0


@dataclass(frozen=True)
class RepCat(Category):
    """The category ``Rep(Q, inner)`` for a finite acyclic quiver ``Q``."""

    quiver: Quiver
    inner: Category

    def __post_init__(self):
        if not self.quiver.is_acyclic:
            raise ValidationError("representation categories need an acyclic quiver")
        if _depth(self) > MAX_NESTING_DEPTH:
            raise ValidationError(f"RepCat nesting deeper than {MAX_NESTING_DEPTH}")

    def __repr__(self):
        return f"RepCat({len(self.quiver.vertices)} vertices, {self.inner!r})"

    @property
    def field(self):
        return self.inner.field

    @property
    def has_projective_test(self):
        return self.inner.has_projective_test

    @property
    def has_injective_test(self):
        return self.inner.has_injective_test

    @property
    def has_dual(self):
        return self.inner.has_dual

    @property
    def has_gproj_oracle(self):
        return isinstance(self.inner, (Vect, NilMod))

    # objects -----------------------------------------------------------------

    def zero_object(self):
        return Representation(self.quiver, self.inner, {}, {}, check=False)

    def validate_object(self, x):
        return validate(x) if isinstance(x, Representation) else [f"{x!r} is not a representation"]

    def _offsets(self, x: Representation) -> dict[str, int]:
        out, off = {}, 0
        for v in self.quiver.vertices:
            out[v] = off
            off += x.at_vertex[v].dim
        return out

    def from_matrix(self, x, y, m, check=True):
        if check:
            for o in (x, y):
                if not isinstance(o, Representation) or o.category != self:
                    raise ValidationError(f"{o!r} is not an object of {self!r}")
            if m.shape != (y.dim, x.dim):
                raise ValidationError(f"matrix shape {m.shape} does not match {y.dim}x{x.dim}")
        ox, oy = self._offsets(x), self._offsets(y)
        comps = {}
        for v in self.quiver.vertices:
            dx, dy = x.at_vertex[v].dim, y.at_vertex[v].dim
            block = m[oy[v] : oy[v] + dy, ox[v] : ox[v] + dx]
            comps[v] = self.inner.from_matrix(x.at_vertex[v], y.at_vertex[v], block, check=check)
        eta = RepMorphism(x, y, comps)
        if check:
            if eta.matrix != m:
                raise ValidationError("matrix has blocks between different vertices")
            self._check_squares(eta)
        return eta

    def _check_squares(self, eta: RepMorphism) -> None:
        for a in self.quiver.arrows:
            lhs = eta.components[a.tgt].matrix @ eta.domain.at_arrow[a.id].matrix
            rhs = eta.codomain.at_arrow[a.id].matrix @ eta.components[a.src].matrix
            if lhs != rhs:
                raise ValidationError(f"square at arrow {a.id} does not commute")

    def check_morphism(self, f):
        for v in self.quiver.vertices:
            self.inner.check_morphism(f.components[v])
        self._check_squares(f)

    def compose(self, g, f):
        if f.codomain != g.domain:
            raise ValidationError("composition of non-composable morphisms")
        return RepMorphism(
            f.domain,
            g.codomain,
            {v: self.inner.compose(g.components[v], f.components[v]) for v in self.quiver.vertices},
        )

    def identity(self, x):
        return RepMorphism(x, x, {v: self.inner.identity(x.at_vertex[v]) for v in self.quiver.vertices})

    def zero_morphism(self, x, y):
        return RepMorphism(
            x, y, {v: self.inner.zero_morphism(x.at_vertex[v], y.at_vertex[v]) for v in self.quiver.vertices}
        )

    def direct_sum(self, objs):
        objs = list(objs)
        inner = self.inner
        verts = {v: inner.direct_sum([F.at_vertex[v] for F in objs]) for v in self.quiver.vertices}
        arrows = {}
        for a in self.quiver.arrows:
            k = len(objs)
            blocks = [[objs[i].at_arrow[a.id] if i == j else None for j in range(k)] for i in range(k)]
            arrows[a.id] = inner.block_morphism(
                [F.at_vertex[a.src] for F in objs], [F.at_vertex[a.tgt] for F in objs], blocks
            )
        return Representation(self.quiver, inner, verts, arrows, check=False)

    def block_morphism(self, srcs, tgts, blocks):
        srcs, tgts = list(srcs), list(tgts)
        comps = {}
        for v in self.quiver.vertices:
            vb = [[None if b is None else b.components[v] for b in row] for row in blocks]
            comps[v] = self.inner.block_morphism([s.at_vertex[v] for s in srcs], [t.at_vertex[v] for t in tgts], vb)
        return RepMorphism(self.direct_sum(srcs), self.direct_sum(tgts), comps)

    # limits ------------------------------------------------------------------

    def kernel(self, f):
        inner = self.inner
        parts = {v: inner.kernel(f.components[v]) for v in self.quiver.vertices}
        F = f.domain
        arrows = {}
        for a in self.quiver.arrows:
            (kw, iw), (kv, iv) = parts[a.src], parts[a.tgt]
            rhs = F.at_arrow[a.id].matrix @ iw.matrix
            sol = solve_linear(iv.matrix, rhs)
            if sol.solution is None:
                raise InternalInconsistency(f"kernel not closed under arrow {a.id}")
            arrows[a.id] = inner.from_matrix(kw, kv, sol.solution, check=False)
        k = Representation(self.quiver, inner, {v: p[0] for v, p in parts.items()}, arrows, check=False)
        return k, RepMorphism(k, F, {v: p[1] for v, p in parts.items()})

    def cokernel(self, f):
        inner = self.inner
        parts = {v: inner.cokernel(f.components[v]) for v in self.quiver.vertices}
        G = f.codomain
        arrows = {}
        for a in self.quiver.arrows:
            (cw, pw), (cv, pv) = parts[a.src], parts[a.tgt]
            rhs = pv.matrix @ G.at_arrow[a.id].matrix
            sol = solve_linear(pw.matrix.T, rhs.T)
            if sol.solution is None:
                raise InternalInconsistency(f"cokernel map along {a.id} is not well defined")
            arrows[a.id] = inner.from_matrix(cw, cv, sol.solution.T, check=False)
        c = Representation(self.quiver, inner, {v: p[0] for v, p in parts.items()}, arrows, check=False)
        return c, RepMorphism(G, c, {v: p[1] for v, p in parts.items()})

    # hom spaces --------------------------------------------------------------

    def _hom_parts(self, x: Representation, y: Representation):
        inner, field = self.inner, self.field
        systems = {}
        for v in self.quiver.vertices:
            # solve each vertex's own equations first so the joint system only
            # carries the commuting squares
            lift, eqs = inner.hom_system(x.at_vertex[v], y.at_vertex[v])
            if eqs.rows:
                lift = lift @ rank_and_kernel(eqs)[1]
            systems[v] = (lift, Matrix.zeros(field, 0, lift.cols))
        offs, total = {}, 0
        for v in self.quiver.vertices:
            offs[v] = total
            total += systems[v][0].cols
        blocks = []  # (row count, {vertex: coefficient matrix})
        for v in self.quiver.vertices:
            e = systems[v][1]
            if e.rows:
                blocks.append((e.rows, {v: e}))
        for a in self.quiver.arrows:
            dyv, dxw = y.at_vertex[a.tgt].dim, x.at_vertex[a.src].dim
            if dyv == 0 or dxw == 0:
                continue
            fa, ga = x.at_arrow[a.id].matrix, y.at_arrow[a.id].matrix
            left = kron(Matrix.identity(field, dyv), fa.T) @ systems[a.tgt][0]
            right = kron(ga, Matrix.identity(field, dxw)) @ systems[a.src][0]
            if a.src == a.tgt:  # unreachable for acyclic quivers, kept for safety
                blocks.append((left.rows, {a.tgt: left - right}))
            else:
                blocks.append((left.rows, {a.tgt: left, a.src: -right}))
        nrows = sum(r for r, _ in blocks)
        eq = field.zeros((nrows, total))
        r0 = 0
        for r, parts in blocks:
            for v, m in parts.items():
                eq[r0 : r0 + r, offs[v] : offs[v] + m.cols] = m.array
            r0 += r
        return systems, offs, total, _wrap(field, eq)

    def hom_dim(self, x, y):
        _, _, total, eq = self._hom_parts(x, y)
        return total - eq.rank()

    def hom_system(self, x, y):
        systems, offs, total, eq = self._hom_parts(x, y)
        field = self.field
        ox, oy = self._offsets(x), self._offsets(y)
        lift = field.zeros((y.dim * x.dim, total))
        for v in self.quiver.vertices:
            lv = systems[v][0]
            dx, dy = x.at_vertex[v].dim, y.at_vertex[v].dim
            for i in range(dy):
                for j in range(dx):
                    lift[(oy[v] + i) * x.dim + ox[v] + j, offs[v] : offs[v] + lv.cols] = lv.array[i * dx + j]
        return _wrap(field, lift), eq

    def hom_basis(self, x, y):
        systems, offs, total, eq = self._hom_parts(x, y)
        _, k = rank_and_kernel(eq)
        out = []
        for j in range(k.cols):
            comps = {}
            for v in self.quiver.vertices:
                lv = systems[v][0]
                z = k[offs[v] : offs[v] + lv.cols, j : j + 1]
                xv, yv = x.at_vertex[v], y.at_vertex[v]
                comps[v] = self.inner.from_matrix(xv, yv, (lv @ z).reshape(yv.dim, xv.dim), check=False)
            out.append(RepMorphism(x, y, comps))
        return out

    # duality -----------------------------------------------------------------

    def dual_category(self):
        return RepCat(opposite(self.quiver), self.inner.dual_category())

    def dual_object(self, x):
        inner = self.inner
        dcat = self.dual_category()
        verts = {v: inner.dual_object(x.at_vertex[v]) for v in self.quiver.vertices}
        arrows = {a.id: inner.dual_morphism(x.at_arrow[a.id]) for a in self.quiver.arrows}
        return Representation(dcat.quiver, dcat.inner, verts, arrows, check=False)

    def dual_morphism(self, f):
        inner = self.inner
        return RepMorphism(
            self.dual_object(f.codomain),
            self.dual_object(f.domain),
            {v: inner.dual_morphism(f.components[v]) for v in self.quiver.vertices},
        )

    # projectivity (split tests live in repkit.gorenstein) ---------------------

    def is_projective(self, x):
        from .gorenstein import is_projective_rep

        return is_projective_rep(x).holds

    def is_injective(self, x):
        from .gorenstein import is_injective_rep

        return is_injective_rep(x).holds

    def projective_cover(self, x):
        from .gorenstein import canonical_projective_epi

        return canonical_projective_epi(x)

    def injective_envelope(self, x):
        from .gorenstein import canonical_injective_mono

        return canonical_injective_mono(x)

    def test_projectives(self):
        from .adjoint import free_f

        return [free_f(v, p, self.quiver) for v in self.quiver.vertices for p in self.inner.test_projectives()]

    def test_injectives(self):
        from .adjoint import cofree_g

        return [cofree_g(v, i, self.quiver) for v in self.quiver.vertices for i in self.inner.test_injectives()]


def as_instance(q: Quiver, inner: Category) -> RepCat:
    return RepCat(q, inner)


def validate(F) -> list[str]:
    """Endpoint and instance diagnostics; an empty list means ``F`` is valid."""
    if not isinstance(F, Representation):
        return [f"{F!r} is not a representation"]
    problems = []
    q, inner = F.quiver, F.inner
    for v in q.vertices:
        x = F.at_vertex.get(v)
        if x is None:
            problems.append(f"vertex {v}: missing object")
            continue
        problems += [f"vertex {v}: {p}" for p in inner.validate_object(x)]
    for a in q.arrows:
        f = F.at_arrow.get(a.id)
        if f is None:
            problems.append(f"arrow {a.id}: missing morphism")
            continue
        if f.domain != F.at_vertex.get(a.src) or f.codomain != F.at_vertex.get(a.tgt):
            problems.append(f"arrow {a.id}: endpoints do not match the vertex objects")
            continue
        try:
            inner.check_morphism(f)
        except ValidationError as exc:
            problems.append(f"arrow {a.id}: {exc}")
    return problems


def rep_hom_basis(F: Representation, G: Representation) -> list[RepMorphism]:
    if F.category != G.category:
        raise ValidationError("representations live in different categories")
    return F.category.hom_basis(F, G)


def rep_kernel_cokernel(eta: RepMorphism) -> KernelCokernel:
    return kernel_cokernel(eta)


def rep_dualize(x):
    """Component-wise dual; a representation of ``Q`` goes to one of ``Q^op``."""
    cat = x.category
    if not cat.has_dual:
        raise CapabilityMissing(f"{cat!r} has no dual")
    if isinstance(x, RepMorphism):
        return cat.dual_morphism(x)
    return cat.dual_object(x)


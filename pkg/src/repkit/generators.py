"""Seeded random quivers, objects and Φ(𝒳)-representations.

Φ-representations are built vertex by vertex in topological order: with
``D = ⊕_{a: w->v} F(w)`` and a chosen cokernel ``C``, ``F(v)`` is a random
extension ``0 -> D -> E -> C -> 0`` (a pushout along a random map out of
the first syzygy of ``C``), so ``φ_v`` is monic with cokernel ``C`` by
construction.
"""

from __future__ import annotations

import numpy as np

from .abcat import Category, NilMod, Vect, biproduct
from .linalg import Matrix
from .quiver import Arrow, Quiver, enumerate_paths
from .rep import Representation

__all__ = [
    "random_quiver",
    "random_nilmod_object",
    "random_object",
    "random_morphism",
    "random_extension",
    "random_phi_rep",
    "break_monic",
    "path_counts",
]


def random_quiver(rng: np.random.Generator, max_vertices: int = 8, max_arrows: int = 12) -> Quiver:
    """A random acyclic (hence left-rooted) quiver; parallel arrows allowed."""
    n = int(rng.integers(1, max_vertices + 1))
    order = [str(v + 1) for v in rng.permutation(n)]
    m = int(rng.integers(0, max_arrows + 1)) if n > 1 else 0
    arrows = []
    for k in range(m):
        i, j = sorted(rng.choice(n, size=2, replace=False))
        arrows.append(Arrow(f"a{k + 1}", order[i], order[j]))
    return Quiver(tuple(str(v + 1) for v in range(n)), tuple(arrows))


def random_nilmod_object(cat: NilMod, rng: np.random.Generator, blocks=None, max_blocks: int = 2):
    """A module with the given (or random) Jordan type in a scrambled basis."""
    if blocks is None:
        k = int(rng.integers(0, max_blocks + 1))
        blocks = sorted((int(rng.integers(1, cat.n + 1)) for _ in range(k)), reverse=True)
    j = cat.jordan_object(blocks)
    if j.dim == 0:
        return j
    p = Matrix.random_invertible(cat.field, j.dim, rng)
    return cat.obj(p @ j.action @ p.inverse())


def random_object(cat: Category, rng: np.random.Generator, dim: int | None = None, max_dim: int = 3):
    if isinstance(cat, Vect):
        return cat.obj(int(rng.integers(0, max_dim + 1)) if dim is None else dim)
    if isinstance(cat, NilMod):
        return random_nilmod_object(cat, rng)
    raise NotImplementedError(f"no random objects for {cat!r}")


def random_morphism(x, y, rng: np.random.Generator):
    """A random combination of a hom basis."""
    cat = x.category
    basis = cat.hom_basis(x, y)
    m = Matrix.zeros(cat.field, y.dim, x.dim)
    for b in basis:
        c = cat.field.random_element(rng)
        if c:
            m = m + b.matrix * c
    return cat.from_matrix(x, y, m, check=False)


def _random_automorphism(x, rng, tries: int = 8):
    cat = x.category
    for _ in range(tries):
        h = random_morphism(x, x, rng)
        if h.matrix.rank() == x.dim:
            return h
    return cat.identity(x)


def random_extension(d, c, rng: np.random.Generator, twist: bool = True):
    """``(E, i: d -> E)`` with ``i`` monic and cokernel ``≅ c``."""
    cat = d.category
    p, cover = cat.projective_cover(c)
    omega, inc = cat.kernel(cover)
    g = random_morphism(omega, d, rng)
    pd, inj, _ = biproduct([p, d], cat)
    rel = cat.add(cat.compose(inj[0], inc), cat.scale(-1, cat.compose(inj[1], g)))
    e, proj = cat.cokernel(rel)
    i = cat.compose(proj, inj[1])
    if twist and e.dim:
        i = cat.compose(_random_automorphism(e, rng), i)
    return e, i


def path_counts(q: Quiver) -> dict[tuple[str, str], int]:
    return {(v, w): len(enumerate_paths(q, v, w)) for v in q.vertices for w in q.vertices}


def random_phi_rep(q: Quiver, inner: Category, rng: np.random.Generator, cokernel=None, max_dim: int | None = None):
    """A random representation in Φ(𝒳).

    ``cokernel(v, rng)`` returns the cokernel object at ``v`` (default: a
    random object). With ``max_dim`` (vector spaces only) the cokernel
    dimensions are chosen greedily so every vertex stays within the bound.
    """
    order = q.topological_order
    budget = None
    if max_dim is not None:
        if not isinstance(inner, Vect):
            raise ValueError("dimension budgets are only supported over vector spaces")
        counts = path_counts(q)
        budget = {v: max_dim for v in q.vertices}
    verts, arrows = {}, {}
    for v in order:
        ins = q.in_arrows(v)
        srcs = [verts[a.src] for a in ins]
        if budget is not None:
            room = min(budget[u] // counts[(v, u)] for u in q.vertices if counts[(v, u)])
            c = inner.obj(int(rng.integers(0, room + 1)))
            for u in q.vertices:
                budget[u] -= c.dim * counts[(v, u)]
        elif cokernel is not None:
            c = cokernel(v, rng)
        else:
            c = random_object(inner, rng)
        d, inj, _ = biproduct(srcs, inner) if srcs else (inner.zero_object(), [], [])
        e, i = random_extension(d, c, rng)
        verts[v] = e
        for a, ja in zip(ins, inj):
            arrows[a.id] = inner.compose(i, ja)
    return Representation(q, inner, verts, arrows, check=False)


def break_monic(F: Representation, rng: np.random.Generator) -> Representation | None:
    """Zero one arrow map with a nonzero source, so some φ_v stops being monic."""
    cands = [a for a in F.quiver.arrows if F.at_vertex[a.src].dim]
    if not cands:
        return None
    a = cands[int(rng.integers(0, len(cands)))]
    arrows = dict(F.at_arrow)
    arrows[a.id] = F.inner.zero_morphism(F.at_vertex[a.src], F.at_vertex[a.tgt])
    return Representation(F.quiver, F.inner, dict(F.at_vertex), arrows, check=False)


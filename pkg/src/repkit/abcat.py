"""Computable abelian categories.

Every object in every instance has an underlying finite-dimensional vector
space over the base field and every morphism an underlying matrix. Generic
operations (composition, hom spaces, monic/epi tests) work through that
matrix; each instance supplies its own kernels, cokernels, direct sums,
hom equations and duality.

Instances here: :class:`Vect` (vector spaces) and :class:`NilMod` (modules
over ``k[x]/(x^n)``, i.e. spaces with a nilpotent operator ``N``, ``N^n = 0``).
Representation categories live in :mod:`repkit.rep` and implement the same
interface.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import CapabilityMissing, IntertwinerViolation, InternalInconsistency, ValidationError
from .linalg import (
    Field,
    Matrix,
    block_diag,
    cokernel_data,
    hstack,
    jordan_matrix,
    kron,
    nilpotent_jordan,
    rank_and_kernel,
    solve_linear,
    vstack,
)

__all__ = [
    "Category",
    "Vect",
    "NilMod",
    "AbObject",
    "AbMorphism",
    "KernelCokernel",
    "ProjInjTest",
    "kernel_cokernel",
    "hom_basis",
    "hom_dimension",
    "projective_injective_test",
    "dualize",
    "double_dual_iso",
    "biproduct",
    "is_monic",
    "is_epi",
    "is_iso",
    "compose",
    "coordinates",
]


class Category(ABC):
    """Interface shared by all category instances.

    Subclasses are immutable and compare by value, so two objects belong to
    the same category iff their ``category`` attributes are equal.
    """

    field: Field
    has_projective_test = True
    has_injective_test = True
    has_gproj_oracle = True
    has_dual = True

    @property
    def capabilities(self) -> dict[str, bool]:
        return {
            "has_projective_test": self.has_projective_test,
            "has_injective_test": self.has_injective_test,
            "has_gproj_oracle": self.has_gproj_oracle,
            "has_dual": self.has_dual,
        }

    # objects and morphisms ---------------------------------------------------

    @abstractmethod
    def zero_object(self): ...

    @abstractmethod
    def validate_object(self, x) -> list[str]:
        """Diagnostics for ``x``; empty when ``x`` is a valid object here."""

    @abstractmethod
    def from_matrix(self, x, y, m: Matrix, check: bool = True):
        """The morphism ``x -> y`` with underlying matrix ``m``."""

    def check_morphism(self, f) -> None:
        self.from_matrix(f.domain, f.codomain, f.matrix, check=True)

    def identity(self, x):
        return self.from_matrix(x, x, Matrix.identity(self.field, x.dim), check=False)

    def zero_morphism(self, x, y):
        return self.from_matrix(x, y, Matrix.zeros(self.field, y.dim, x.dim), check=False)

    def compose(self, g, f):
        """``g ∘ f``."""
        if f.codomain != g.domain:
            raise ValidationError("composition of non-composable morphisms")
        return self.from_matrix(f.domain, g.codomain, g.matrix @ f.matrix, check=False)

    def add(self, f, g):
        return self.from_matrix(f.domain, f.codomain, f.matrix + g.matrix, check=False)

    def scale(self, c, f):
        return self.from_matrix(f.domain, f.codomain, f.matrix * c, check=False)

    @abstractmethod
    def direct_sum(self, objs: Sequence): ...

    @abstractmethod
    def block_morphism(self, srcs: Sequence, tgts: Sequence, blocks: Sequence[Sequence]):
        """Morphism ``⊕srcs -> ⊕tgts`` whose (i, j) block ``tgts[i] <- srcs[j]`` is ``blocks[i][j]``.

        ``None`` blocks are zero.
        """

    @abstractmethod
    def kernel(self, f) -> tuple[Any, Any]: ...

    @abstractmethod
    def cokernel(self, f) -> tuple[Any, Any]: ...

    @abstractmethod
    def hom_system(self, x, y) -> tuple[Matrix, Matrix]:
        """``(L, E)`` with ``Hom(x, y) = {L z : E z = 0}`` in row-major vec coordinates."""

    def hom_dim(self, x, y) -> int:
        _, eqs = self.hom_system(x, y)
        return eqs.cols - eqs.rank()

    def hom_basis(self, x, y) -> list:
        lift, eqs = self.hom_system(x, y)
        _, k = rank_and_kernel(eqs)
        vecs = lift @ k
        return [
            self.from_matrix(x, y, vecs[:, j : j + 1].reshape(y.dim, x.dim), check=False)
            for j in range(vecs.cols)
        ]

    # duality -----------------------------------------------------------------

    def dual_category(self) -> "Category":
        raise CapabilityMissing(f"{self!r} has no dual")

    def dual_object(self, x):
        raise CapabilityMissing(f"{self!r} has no dual")

    def dual_morphism(self, f):
        raise CapabilityMissing(f"{self!r} has no dual")

    # projectivity ------------------------------------------------------------

    def is_projective(self, x) -> bool:
        raise CapabilityMissing(f"{self!r} has no projectivity test")

    def is_injective(self, x) -> bool:
        raise CapabilityMissing(f"{self!r} has no injectivity test")

    def projective_cover(self, x):
        """An epimorphism ``P -> x`` with ``P`` projective, as ``(P, epi)``."""
        raise CapabilityMissing(f"{self!r} has no projective covers")

    def injective_envelope(self, x):
        """A monomorphism ``x -> I`` with ``I`` injective, as ``(I, mono)``."""
        raise CapabilityMissing(f"{self!r} has no injective envelopes")

    def test_projectives(self) -> list:
        """Indecomposable projectives; Hom-exactness against these is enough."""
        raise CapabilityMissing(f"{self!r} has no list of test projectives")

    def test_injectives(self) -> list:
        raise CapabilityMissing(f"{self!r} has no list of test injectives")


# ---------------------------------------------------------------------------
# module categories


@dataclass(frozen=True)
class AbObject:
    """An object of :class:`Vect` (``action is None``) or :class:`NilMod`."""

    category: Category
    dim: int
    action: Matrix | None = None

    def __repr__(self):
        if self.action is None:
            return f"{self.category!r}^{self.dim}"
        blocks = nilpotent_jordan(self.action).blocks if self.dim else ()
        return f"{self.category!r}<dim={self.dim}, jordan={list(blocks)}>"


@dataclass(frozen=True)
class AbMorphism:
    domain: AbObject
    codomain: AbObject
    matrix: Matrix

    @property
    def category(self) -> Category:
        return self.domain.category


class _ModuleCategory(Category):
    """Shared machinery for vector spaces with (optional) operator data."""

    def _action(self, x: AbObject) -> Matrix | None:
        return x.action

    def _make(self, dim: int, action: Matrix | None) -> AbObject:
        raise NotImplementedError

    def zero_object(self) -> AbObject:
        return self._make(0, None if isinstance(self, Vect) else Matrix.zeros(self.field, 0, 0))

    def from_matrix(self, x, y, m, check=True):
        if check:
            for o in (x, y):
                if o.category != self:
                    raise ValidationError(f"object {o!r} is not in {self!r}")
            if m.field != self.field:
                raise ValidationError(f"matrix over {m.field!r}, category over {self.field!r}")
            if m.shape != (y.dim, x.dim):
                raise ValidationError(f"matrix shape {m.shape} does not match {y.dim}x{x.dim}")
            if x.action is not None and y.action @ m != m @ x.action:
                raise IntertwinerViolation("matrix does not intertwine the actions")
        return AbMorphism(x, y, m)

    def direct_sum(self, objs):
        objs = list(objs)
        dim = sum(o.dim for o in objs)
        if isinstance(self, Vect):
            return self._make(dim, None)
        return self._make(dim, block_diag(*[o.action for o in objs], field=self.field))

    def block_morphism(self, srcs, tgts, blocks):
        srcs, tgts = list(srcs), list(tgts)
        rows = []
        for i, t in enumerate(tgts):
            row = []
            for j, s in enumerate(srcs):
                b = blocks[i][j]
                row.append(Matrix.zeros(self.field, t.dim, s.dim) if b is None else b.matrix)
            rows.append(hstack(*row, rows=t.dim, field=self.field))
        width = sum(s.dim for s in srcs)
        m = vstack(*rows, cols=width, field=self.field)
        return AbMorphism(self.direct_sum(srcs), self.direct_sum(tgts), m)

    def kernel(self, f):
        self.check_morphism(f)
        _, k = rank_and_kernel(f.matrix)
        act = None
        if f.domain.action is not None:
            sol = solve_linear(k, f.domain.action @ k)
            if sol.solution is None:
                raise InternalInconsistency("kernel is not a submodule")
            act = sol.solution
        obj = self._make(k.cols, act)
        return obj, AbMorphism(obj, f.domain, k)

    def cokernel(self, f):
        self.check_morphism(f)
        p, d = cokernel_data(f.matrix)
        act = None
        if f.codomain.action is not None:
            sol = solve_linear(p.T, (p @ f.codomain.action).T)
            if sol.solution is None:
                raise InternalInconsistency("cokernel action is not well defined")
            act = sol.solution.T
        obj = self._make(d, act)
        return obj, AbMorphism(f.codomain, obj, p)

    def hom_system(self, x, y):
        n = y.dim * x.dim
        lift = Matrix.identity(self.field, n)
        if x.action is None:
            return lift, Matrix.zeros(self.field, 0, n)
        eqs = kron(Matrix.identity(self.field, y.dim), x.action.T) - kron(
            y.action, Matrix.identity(self.field, x.dim)
        )
        return lift, eqs

    def dual_category(self):
        return self

    def dual_object(self, x):
        return self._make(x.dim, None if x.action is None else x.action.T)

    def dual_morphism(self, f):
        return AbMorphism(self.dual_object(f.codomain), self.dual_object(f.domain), f.matrix.T)

    def injective_envelope(self, x):
        p, cover = self.projective_cover(self.dual_object(x))
        return self.dual_object(p), self.dual_morphism(cover)


@dataclass(frozen=True)
class Vect(_ModuleCategory):
    """Finite-dimensional vector spaces over ``field``."""

    field: Field

    def __repr__(self):
        return f"Vect({self.field!r})"

    def _make(self, dim, action=None):
        return AbObject(self, dim, None)

    def obj(self, dim: int) -> AbObject:
        return AbObject(self, int(dim))

    def validate_object(self, x):
        if not isinstance(x, AbObject) or x.category != self:
            return [f"{x!r} is not an object of {self!r}"]
        if x.dim < 0:
            return ["negative dimension"]
        if x.action is not None:
            return ["vector spaces carry no action"]
        return []

    def is_projective(self, x):
        return True

    def is_injective(self, x):
        return True

    def projective_cover(self, x):
        return x, self.identity(x)

    def test_projectives(self):
        return [self.obj(1)]

    def test_injectives(self):
        return [self.obj(1)]


@dataclass(frozen=True)
class NilMod(_ModuleCategory):
    """Finite-dimensional modules over ``k[x]/(x^n)``.

    An object is a space with a nilpotent operator ``N`` (``N^n = 0``); the
    regular module ``R`` is one Jordan block of size ``n``. The algebra is
    self-injective, so projective and injective objects coincide: exactly
    the sums of copies of ``R``.
    """

    field: Field
    n: int = 2

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("NilMod needs n >= 2")

    def __repr__(self):
        return f"NilMod({self.field!r}, n={self.n})"

    def _make(self, dim, action):
        return AbObject(self, dim, action)

    def obj(self, action) -> AbObject:
        """Object with the given action matrix (validated)."""
        if not isinstance(action, Matrix):
            action = Matrix(self.field, action)
        x = AbObject(self, action.rows, action)
        problems = self.validate_object(x)
        if problems:
            raise ValidationError("; ".join(problems))
        return x

    def jordan_object(self, blocks: Sequence[int]) -> AbObject:
        if any(not 1 <= s <= self.n for s in blocks):
            raise ValidationError(f"block sizes must lie in 1..{self.n}")
        return AbObject(self, sum(blocks), jordan_matrix(self.field, blocks))

    def regular(self) -> AbObject:
        return self.jordan_object([self.n])

    def simple(self) -> AbObject:
        return self.jordan_object([1])

    def validate_object(self, x):
        if not isinstance(x, AbObject) or x.category != self:
            return [f"{x!r} is not an object of {self!r}"]
        if x.action is None:
            return ["module object needs an action matrix"]
        if x.action.field != self.field:
            return ["action matrix over the wrong field"]
        if x.action.shape != (x.dim, x.dim):
            return [f"action shape {x.action.shape} does not match dimension {x.dim}"]
        if not x.action.power(self.n).is_zero():
            return [f"action does not satisfy N^{self.n} = 0"]
        return []

    def jordan_blocks(self, x) -> tuple[int, ...]:
        return nilpotent_jordan(x.action).blocks if x.dim else ()

    def canonical(self, x) -> tuple[AbObject, AbMorphism]:
        """``(J, iso)`` with ``J`` in Jordan form (blocks descending) and ``iso: x -> J``."""
        if x.dim == 0:
            return x, self.identity(x)
        data = nilpotent_jordan(x.action)
        j = self.jordan_object(data.blocks)
        return j, AbMorphism(x, j, data.basis.inverse())

    def is_projective(self, x):
        return all(s == self.n for s in self.jordan_blocks(x))

    is_injective = is_projective

    def projective_cover(self, x):
        top, t = cokernel_data(x.action)
        lifts = solve_linear(top, Matrix.identity(self.field, t)).solution
        cols = []
        for j in range(t):
            g = lifts[:, j : j + 1]
            for _ in range(self.n):
                cols.append(g)
                g = x.action @ g
        p = self.direct_sum([self.regular()] * t)
        return p, AbMorphism(p, x, hstack(*cols, rows=x.dim, field=self.field))

    def test_projectives(self):
        return [self.regular()]

    def test_injectives(self):
        return [self.regular()]


# ---------------------------------------------------------------------------
# generic helpers


def compose(*fs):
    """``compose(h, g, f) = h ∘ g ∘ f``."""
    out = fs[-1]
    for g in reversed(fs[:-1]):
        out = g.category.compose(g, out)
    return out


def is_monic(f) -> bool:
    return f.matrix.rank() == f.domain.dim


def is_epi(f) -> bool:
    return f.matrix.rank() == f.codomain.dim


def is_iso(f) -> bool:
    return f.domain.dim == f.codomain.dim and is_monic(f)


@dataclass(frozen=True)
class KernelCokernel:
    kernel: Any
    inclusion: Any
    cokernel: Any
    projection: Any
    image: Any
    image_inclusion: Any


def kernel_cokernel(f) -> KernelCokernel:
    cat = f.category
    k, inc = cat.kernel(f)
    c, proj = cat.cokernel(f)
    im, im_inc = cat.kernel(proj)
    return KernelCokernel(k, inc, c, proj, im, im_inc)


def hom_basis(x, y) -> list:
    if x.category != y.category:
        raise ValidationError("objects live in different categories")
    return x.category.hom_basis(x, y)


def hom_dimension(x, y) -> int:
    if x.category != y.category:
        raise ValidationError("objects live in different categories")
    return x.category.hom_dim(x, y)


def coordinates(f, basis: Sequence) -> Matrix | None:
    """Coefficients of ``f`` in ``basis`` (a column), or ``None`` if outside the span."""
    field = f.matrix.field
    if not basis:
        return Matrix.zeros(field, 0, 1) if f.matrix.is_zero() else None
    a = hstack(*[b.matrix.vec() for b in basis])
    return solve_linear(a, f.matrix.vec()).solution


@dataclass(frozen=True)
class ProjInjTest:
    is_projective: bool
    is_injective: bool
    cover: Any  # (P, epi) or None
    envelope: Any  # (I, mono) or None


def projective_injective_test(x) -> ProjInjTest:
    cat = x.category
    if not (cat.has_projective_test and cat.has_injective_test):
        raise CapabilityMissing(f"{cat!r} lacks projective/injective tests")
    return ProjInjTest(
        cat.is_projective(x), cat.is_injective(x), cat.projective_cover(x), cat.injective_envelope(x)
    )


def dualize(x_or_f):
    """Contravariant dual of an object or a morphism."""
    cat = x_or_f.category
    if not cat.has_dual:
        raise CapabilityMissing(f"{cat!r} has no dual")
    if hasattr(x_or_f, "domain"):
        return cat.dual_morphism(x_or_f)
    return cat.dual_object(x_or_f)


def double_dual_iso(x):
    """Evaluation isomorphism ``x -> x⁺⁺`` (the identity matrix in these instances)."""
    dd = dualize(dualize(x))
    if dd.dim != x.dim:
        raise InternalInconsistency("double dual changed the dimension")
    return dd.category.from_matrix(x, dd, Matrix.identity(x.category.field, x.dim))


def biproduct(objs: Sequence, category: Category | None = None):
    """``(S, injections, projections)`` for the direct sum of ``objs``."""
    objs = list(objs)
    cat = category or objs[0].category
    s = cat.direct_sum(objs)
    k = len(objs)
    ident = [cat.identity(o) for o in objs]
    injections = [
        cat.block_morphism([o], objs, [[ident[i] if r == i else None] for r in range(k)])
        for i, o in enumerate(objs)
    ]
    projections = [
        cat.block_morphism(objs, [o], [[ident[i] if c == i else None for c in range(k)]])
        for i, o in enumerate(objs)
    ]
    return s, injections, projections

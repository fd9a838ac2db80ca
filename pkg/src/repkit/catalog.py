"""Small named quivers and representations used in tests and demos."""

from __future__ import annotations

from .abcat import Category, Vect
from .linalg import QQ, Matrix
from .quiver import Arrow, Quiver
from .rep import Representation

__all__ = ["example_quiver", "all_k_representation", "a2_quiver", "zigzag_quiver", "loop_quiver", "kronecker_quiver"]


def example_quiver() -> Quiver:
    """``1 -> 3 <- 2``, a double arrow ``3 ⇉ 4``, and ``4 -> 5``."""
    return Quiver(
        ("1", "2", "3", "4", "5"),
        (
            Arrow("a1", "1", "3"),
            Arrow("a2", "2", "3"),
            Arrow("a3", "3", "4"),
            Arrow("a4", "3", "4"),
            Arrow("a5", "4", "5"),
        ),
    )


def a2_quiver() -> Quiver:
    return Quiver(("1", "2"), (Arrow("a", "1", "2"),))


def kronecker_quiver() -> Quiver:
    return Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "1", "2")))


def zigzag_quiver(n: int = 5) -> Quiver:
    """``1 <- 2 -> 3 <- 4 -> 5 ...`` on ``n`` vertices."""
    verts = tuple(str(i) for i in range(1, n + 1))
    arrows = []
    for i in range(1, n):
        src, tgt = (i + 1, i) if i % 2 else (i, i + 1)
        arrows.append(Arrow(f"z{i}", str(src), str(tgt)))
    return Quiver(verts, tuple(arrows))


def loop_quiver() -> Quiver:
    return Quiver(("1",), (Arrow("l", "1", "1"),))


def all_k_representation(inner: Category | None = None) -> Representation:
    """The worked filtration example with ``x = y = z0 = z1 = k``.

    ``F(3) = x⊕y⊕z0``, ``F(4) = F(5) = (x⊕y⊕z0)² ⊕ z1``; the two arrows
    ``3 -> 4`` include into the two copies and ``4 -> 5`` is the identity.
    """
    inner = inner or Vect(QQ)
    if not isinstance(inner, Vect):
        raise ValueError("the example lives over vector spaces")
    f = inner.field
    q = example_quiver()
    obj = inner.obj
    e = lambda rows, cols, pairs: Matrix.from_entries(  # noqa: E731
        f, rows, cols, [1 if (r, c) in pairs else 0 for r in range(rows) for c in range(cols)]
    )
    arrows = {
        "a1": e(3, 1, {(0, 0)}),
        "a2": e(3, 1, {(1, 0)}),
        "a3": e(7, 3, {(0, 0), (1, 1), (2, 2)}),
        "a4": e(7, 3, {(3, 0), (4, 1), (5, 2)}),
        "a5": Matrix.identity(f, 7),
    }
    verts = {"1": obj(1), "2": obj(1), "3": obj(3), "4": obj(7), "5": obj(7)}
    return Representation(q, inner, verts, arrows)

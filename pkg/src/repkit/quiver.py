"""Finite quivers: validation, finiteness report, the V-sequence, paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .errors import PathExplosion, ValidationError

__all__ = [
    "Arrow",
    "Quiver",
    "QuiverReport",
    "classify_quiver",
    "enumerate_paths",
    "opposite",
    "v_sequence",
]

Path = tuple[str, ...]


@dataclass(frozen=True)
class Arrow:
    id: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Quiver:
    """A finite directed multigraph.

    Declaration order of vertices and arrows is significant: it fixes the
    block order of every assembled map and the order of enumerated paths.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        verts = tuple(str(v) for v in self.vertices)
        arrows = tuple(
            a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2])) for a in self.arrows
        )
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)
        if len(set(verts)) != len(verts):
            raise ValidationError("duplicate vertex ids")
        ids = [a.id for a in arrows]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate arrow ids")
        vs = set(verts)
        for a in arrows:
            if a.src not in vs or a.tgt not in vs:
                raise ValidationError(f"arrow {a.id} has an undeclared endpoint")

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Iterable[tuple]) -> "Quiver":
        """Build from ``(src, tgt)`` or ``(id, src, tgt)`` tuples; missing ids become a1, a2, ..."""
        arrows = []
        for k, e in enumerate(edges, 1):
            arrows.append(Arrow(*map(str, e)) if len(e) == 3 else Arrow(f"a{k}", str(e[0]), str(e[1])))
        return cls(tuple(vertices), tuple(arrows))

    @cached_property
    def arrow_index(self) -> Mapping[str, int]:
        return {a.id: i for i, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self) -> Mapping[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, arrow_id: str) -> Arrow:
        return self.arrows[self.arrow_index[arrow_id]]

    def in_arrows(self, v: str) -> tuple[Arrow, ...]:
        return self._in[v]

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        return self._out[v]

    @cached_property
    def _in(self) -> Mapping[str, tuple[Arrow, ...]]:
        return {v: tuple(a for a in self.arrows if a.tgt == v) for v in self.vertices}

    @cached_property
    def _out(self) -> Mapping[str, tuple[Arrow, ...]]:
        return {v: tuple(a for a in self.arrows if a.src == v) for v in self.vertices}

    def check_vertex(self, v) -> str:
        v = str(v)
        if v not in self.vertex_index:
            raise ValidationError(f"unknown vertex {v!r}")
        return v

    @cached_property
    def topological_order(self) -> tuple[str, ...] | None:
        """Vertices sorted so arrows point forward; ``None`` when there is a cycle."""
        indeg = {v: len(self._in[v]) for v in self.vertices}
        ready = [v for v in self.vertices if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self._out[v]:
                indeg[a.tgt] -= 1
                if indeg[a.tgt] == 0:
                    ready.append(a.tgt)
        return tuple(order) if len(order) == len(self.vertices) else None

    @property
    def is_acyclic(self) -> bool:
        return self.topological_order is not None

    def adjacency(self) -> np.ndarray:
        """Arrow-count matrix ``A[i, j]`` = number of arrows from vertex i to vertex j."""
        n = len(self.vertices)
        a = np.zeros((n, n), dtype=object)
        a.fill(0)
        for arr in self.arrows:
            a[self.vertex_index[arr.src], self.vertex_index[arr.tgt]] += 1
        return a


def v_sequence(q: Quiver) -> list[frozenset[str]]:
    """``V_0 = {}``, ``V_{k+1}`` = vertices whose in-arrows all start in ``V_k``; up to the fixed point."""
    seq = [frozenset()]
    while True:
        prev = seq[-1]
        nxt = frozenset(v for v in q.vertices if all(a.src in prev for a in q.in_arrows(v)))
        if nxt == prev:
            return seq
        seq.append(nxt)


@dataclass(frozen=True)
class QuiverReport:
    acyclic: bool
    left_rooted: bool
    right_rooted: bool
    target_finite: bool
    source_finite: bool
    locally_path_finite: bool
    v_sequence: tuple[tuple[str, ...], ...]
    in_degree: Mapping[str, int] = field(default_factory=dict)
    out_degree: Mapping[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "acyclic": self.acyclic,
            "left_rooted": self.left_rooted,
            "right_rooted": self.right_rooted,
            "target_finite": self.target_finite,
            "source_finite": self.source_finite,
            "locally_path_finite": self.locally_path_finite,
            "v_sequence": [list(s) for s in self.v_sequence],
            "in_degree": dict(self.in_degree),
            "out_degree": dict(self.out_degree),
        }


def _ordered(q: Quiver, s: frozenset[str]) -> tuple[str, ...]:
    return tuple(v for v in q.vertices if v in s)


def classify_quiver(q: Quiver) -> QuiverReport:
    if not isinstance(q, Quiver):
        raise ValidationError("expected a Quiver")
    seq = v_sequence(q)
    left = seq[-1] == frozenset(q.vertices)
    right = v_sequence(opposite(q))[-1] == frozenset(q.vertices)
    acyclic = q.is_acyclic
    # every cycle on a finite quiver gives infinitely many paths through it
    return QuiverReport(
        acyclic=acyclic,
        left_rooted=left,
        right_rooted=right,
        target_finite=True,
        source_finite=True,
        locally_path_finite=acyclic,
        v_sequence=tuple(_ordered(q, s) for s in seq),
        in_degree={v: len(q.in_arrows(v)) for v in q.vertices},
        out_degree={v: len(q.out_arrows(v)) for v in q.vertices},
    )


def enumerate_paths(q: Quiver, v, w) -> list[Path]:
    """All paths from ``v`` to ``w`` as tuples of arrow ids in traversal order.

    The empty path is included when ``v == w``. Paths are sorted
    lexicographically by the declaration index of their arrows.
    """
    v, w = q.check_vertex(v), q.check_vertex(w)
    if not q.is_acyclic:
        raise PathExplosion("quiver has a cycle; path sets may be infinite")
    reaches = _reaches(q, w)
    out: list[Path] = []

    def walk(u: str, path: Path):
        if u == w:
            out.append(path)
        for a in q.out_arrows(u):
            if a.tgt in reaches:
                walk(a.tgt, path + (a.id,))

    if v in reaches:
        walk(v, ())
    idx = q.arrow_index
    out.sort(key=lambda p: [idx[a] for a in p])
    return out


def _reaches(q: Quiver, w: str) -> set[str]:
    """Vertices with a path to ``w`` (including ``w``)."""
    seen = {w}
    stack = [w]
    while stack:
        u = stack.pop()
        for a in q.in_arrows(u):
            if a.src not in seen:
                seen.add(a.src)
                stack.append(a.src)
    return seen


def opposite(q: Quiver) -> Quiver:
    return Quiver(q.vertices, tuple(Arrow(a.id, a.tgt, a.src) for a in q.arrows))

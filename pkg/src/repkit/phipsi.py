"""The canonical maps φ_v, ψ_v and the classes Φ(𝒳), Ψ(𝒴).

``φ_v^F : ⊕_{a: w->v} F(w) -> F(v)`` and ``ψ_v^F : F(v) -> ⊕_{a: v->w} F(w)``
are assembled in arrow declaration order. ``F ∈ Φ(𝒳)`` when every φ_v is
monic with cokernel in 𝒳; ``Ψ(𝒴)`` mirrors this with epis and kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .abcat import is_epi, is_monic
from .errors import CapabilityMissing, ValidationError
from .rep import Representation

__all__ = [
    "CLASS_NAMES",
    "ObjectClass",
    "object_class",
    "phi_map",
    "psi_map",
    "PhiVertex",
    "PhiReport",
    "PsiVertex",
    "PsiReport",
    "MembershipVerdict",
    "phi_report",
    "psi_report",
    "in_phi",
    "in_psi",
    "BridgeReport",
    "duality_bridge",
]


# ---------------------------------------------------------------------------
# membership oracles


@dataclass(frozen=True)
class ObjectClass:
    """An isomorphism-closed class of objects given by a decision procedure."""

    name: str
    contains: Callable[[object], bool]
    dual_name: str

    def __call__(self, x) -> bool:
        return bool(self.contains(x))

    def __repr__(self):
        return f"ObjectClass({self.name})"


def _is_zero(x):
    return x.dim == 0


def _proj(x):
    return x.category.is_projective(x)


def _inj(x):
    return x.category.is_injective(x)


def _flat(x):
    from .gorenstein import is_flat

    return is_flat(x)


def _gproj(x):
    from .gorenstein import is_gproj

    return is_gproj(x, build_witness=False).holds


def _ginj(x):
    from .gorenstein import is_ginj

    return is_ginj(x, build_witness=False).holds


def _wgflat(x):
    from .gorenstein import is_wgflat

    return is_wgflat(x)


_CLASSES = {
    "all": (lambda x: True, "all"),
    "zero": (_is_zero, "zero"),
    "proj": (_proj, "inj"),
    "inj": (_inj, "proj"),
    "flat": (_flat, "inj"),
    "gproj": (_gproj, "ginj"),
    "ginj": (_ginj, "gproj"),
    "wgflat": (_wgflat, "ginj"),
}
CLASS_NAMES = tuple(_CLASSES)


def object_class(name: "str | ObjectClass") -> ObjectClass:
    if isinstance(name, ObjectClass):
        return name
    try:
        pred, dual = _CLASSES[name]
    except KeyError:
        raise ValidationError(f"unknown class {name!r}; expected one of {', '.join(CLASS_NAMES)}") from None
    return ObjectClass(name, pred, dual)


# ---------------------------------------------------------------------------
# the canonical maps


def phi_map(F: Representation, v):
    q, inner = F.quiver, F.inner
    v = q.check_vertex(v)
    ins = q.in_arrows(v)
    srcs = [F.at_vertex[a.src] for a in ins]
    return inner.block_morphism(srcs, [F.at_vertex[v]], [[F.at_arrow[a.id] for a in ins]])


def psi_map(G: Representation, v):
    q, inner = G.quiver, G.inner
    v = q.check_vertex(v)
    outs = q.out_arrows(v)
    tgts = [G.at_vertex[a.tgt] for a in outs]
    return inner.block_morphism([G.at_vertex[v]], tgts, [[G.at_arrow[a.id]] for a in outs])


@dataclass(frozen=True)
class PhiVertex:
    vertex: str
    map: object
    monic: bool
    cokernel: object
    projection: object

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "monic": self.monic, "coker_dim": self.cokernel.dim}


@dataclass(frozen=True)
class PsiVertex:
    vertex: str
    map: object
    epi: bool
    kernel: object
    inclusion: object

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "epi": self.epi, "ker_dim": self.kernel.dim}


@dataclass(frozen=True)
class PhiReport:
    vertices: tuple[PhiVertex, ...]

    @property
    def all_monic(self) -> bool:
        return all(pv.monic for pv in self.vertices)

    def __getitem__(self, v) -> PhiVertex:
        for pv in self.vertices:
            if pv.vertex == str(v):
                return pv
        raise KeyError(v)


@dataclass(frozen=True)
class PsiReport:
    vertices: tuple[PsiVertex, ...]

    @property
    def all_epi(self) -> bool:
        return all(pv.epi for pv in self.vertices)

    def __getitem__(self, v) -> PsiVertex:
        for pv in self.vertices:
            if pv.vertex == str(v):
                return pv
        raise KeyError(v)


def phi_report(F: Representation) -> PhiReport:
    out = []
    for v in F.quiver.vertices:
        m = phi_map(F, v)
        c, p = F.inner.cokernel(m)
        out.append(PhiVertex(v, m, is_monic(m), c, p))
    return PhiReport(tuple(out))


def psi_report(G: Representation) -> PsiReport:
    out = []
    for v in G.quiver.vertices:
        m = psi_map(G, v)
        k, i = G.inner.kernel(m)
        out.append(PsiVertex(v, m, is_epi(m), k, i))
    return PsiReport(tuple(out))


@dataclass(frozen=True)
class MembershipVerdict:
    holds: bool
    cls: str
    evidence: tuple[dict, ...]
    failing_vertex: str | None = None
    reason: str = ""

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "class": self.cls,
            "failing_vertex": self.failing_vertex,
            "reason": self.reason,
            "vertices": list(self.evidence),
        }


def _verdict(entries, cls: ObjectClass, flag: str, obj: str) -> MembershipVerdict:
    evidence, failing, reason = [], None, ""
    for e in entries:
        ok_map = getattr(e, flag)
        x = getattr(e, obj)
        member = bool(ok_map and cls(x))
        d = e.to_dict()
        d["in_class"] = member
        evidence.append(d)
        if failing is None and not member:
            failing = e.vertex
            reason = f"not {flag}" if not ok_map else f"{obj} not in {cls.name}"
    return MembershipVerdict(failing is None, cls.name, tuple(evidence), failing, reason)


def in_phi(F: Representation, membership="all", report: PhiReport | None = None) -> MembershipVerdict:
    cls = object_class(membership)
    _require(F, cls)
    return _verdict((report or phi_report(F)).vertices, cls, "monic", "cokernel")


def in_psi(G: Representation, membership="all", report: PsiReport | None = None) -> MembershipVerdict:
    cls = object_class(membership)
    _require(G, cls)
    return _verdict((report or psi_report(G)).vertices, cls, "epi", "kernel")


def _require(F: Representation, cls: ObjectClass) -> None:
    inner = F.inner
    need = {
        "proj": inner.has_projective_test,
        "inj": inner.has_injective_test,
        "flat": inner.has_dual and inner.has_injective_test,
        "gproj": inner.has_gproj_oracle,
        "ginj": inner.has_gproj_oracle and inner.has_dual,
        "wgflat": inner.has_gproj_oracle and inner.has_dual,
    }.get(cls.name, True)
    if not need:
        raise CapabilityMissing(f"{inner!r} cannot decide membership in {cls.name}")


# ---------------------------------------------------------------------------
# duality


@dataclass(frozen=True)
class BridgeReport:
    equal_at: dict
    phi_member: bool | None
    psi_member: bool | None
    cls: str

    @property
    def identity_holds(self) -> bool:
        return all(self.equal_at.values())

    @property
    def implication_holds(self) -> bool:
        return not self.phi_member or bool(self.psi_member)

    @property
    def ok(self) -> bool:
        return self.identity_holds and self.implication_holds

    def to_dict(self) -> dict:
        return {
            "class": self.cls,
            "equal_at": dict(self.equal_at),
            "phi_member": self.phi_member,
            "psi_member": self.psi_member,
            "ok": self.ok,
        }


def duality_bridge(F: Representation, membership="all") -> BridgeReport:
    """Compare ``(φ_v^F)⁺`` with ``ψ_v^{F⁺}`` exactly, and ``F ∈ Φ(𝒳) ⇒ F⁺ ∈ Ψ(𝒳⁺)``."""
    cat = F.category
    if not cat.has_dual:
        raise CapabilityMissing(f"{cat!r} has no dual")
    inner = F.inner
    Fd = cat.dual_object(F)
    equal = {}
    for v in F.quiver.vertices:
        lhs = inner.dual_morphism(phi_map(F, v))
        rhs = psi_map(Fd, v)
        equal[v] = lhs.domain == rhs.domain and lhs.codomain == rhs.codomain and lhs.matrix == rhs.matrix
    cls = object_class(membership)
    phi_in = in_phi(F, cls).holds
    psi_in = in_psi(Fd, object_class(cls.dual_name)).holds if phi_in else None
    return BridgeReport(equal, phi_in, psi_in, cls.name)

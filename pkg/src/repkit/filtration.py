"""Filtrations of Φ(𝒳)-representations by sums of free representations.

Each round looks at the current quotient ``Q = F/F_i``, takes the vertices
whose in-neighbours all carry zero, and includes ``⊕ f_v(Q(v))`` into ``Q``
through the counits. Pulling that subobject back along ``F -> Q`` gives
``F_{i+1}``. On a finite acyclic quiver the quotient vanishes after at most
``len(v_sequence) - 1`` rounds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abcat import is_iso, is_monic
from .adjoint import f_counit, free_f
from .errors import InternalInconsistency, NotInPhi, ValidationError
from .linalg import Matrix, solve_linear
from .phipsi import in_phi, object_class, phi_report
from .quiver import v_sequence
from .rep import Representation, RepCat, RepMorphism

__all__ = [
    "v_f_set",
    "PeelResult",
    "peel_step",
    "FiltrationStep",
    "FiltrationCertificate",
    "CertificateVerdict",
    "filtrate",
    "verify_certificate",
    "factor_through_mono",
    "factor_through_epi",
]


def v_f_set(F: Representation) -> frozenset[str]:
    """Vertices all of whose in-arrows start at a zero object."""
    q = F.quiver
    return frozenset(v for v in q.vertices if all(F.at_vertex[a.src].dim == 0 for a in q.in_arrows(v)))


def factor_through_mono(mono, g):
    """The unique ``h`` with ``mono ∘ h = g``, or ``None``."""
    sol = solve_linear(mono.matrix, g.matrix)
    if sol.solution is None:
        return None
    return mono.category.from_matrix(g.domain, mono.domain, sol.solution, check=False)


def factor_through_epi(epi, g):
    """The unique ``h`` with ``h ∘ epi = g``, or ``None``."""
    sol = solve_linear(epi.matrix.T, g.matrix.T)
    if sol.solution is None:
        return None
    return epi.category.from_matrix(epi.codomain, g.codomain, sol.solution.T, check=False)


@dataclass(frozen=True)
class PeelResult:
    vertices: frozenset[str]
    summands: tuple[tuple[str, object], ...]
    sub: Representation  # ⊕ f_v(F(v))
    inclusion: RepMorphism  # sub -> F
    quotient: Representation
    projection: RepMorphism  # F -> quotient
    checks: dict


def peel_step(F: Representation, check_phi: bool = True) -> PeelResult:
    q, inner = F.quiver, F.inner
    cat = RepCat(q, inner)
    report = phi_report(F) if check_phi else None
    if check_phi and not report.all_monic:
        bad = next(pv.vertex for pv in report.vertices if not pv.monic)
        raise NotInPhi(f"φ is not monic at vertex {bad}")
    V = v_f_set(F)
    summands = tuple((v, F.at_vertex[v]) for v in q.vertices if v in V and F.at_vertex[v].dim)
    parts = [free_f(v, X, q) for v, X in summands]
    sub = cat.direct_sum(parts)
    if parts:
        inc = cat.block_morphism(parts, [F], [[f_counit(v, F) for v, _ in summands]])
    else:
        inc = cat.zero_morphism(sub, F)
    if not is_monic(inc):
        raise NotInPhi("the counit map from the peeled sum is not monic")
    quot, proj = cat.cokernel(inc)
    checks = {"monic": True, "agrees_on_V": all(sub.at_vertex[v].dim == F.at_vertex[v].dim for v in V)}
    if report is not None:
        qrep = phi_report(quot)
        checks["quotient_in_phi"] = qrep.all_monic
        checks["cokernels_preserved"] = all(
            qrep[v].cokernel.dim == report[v].cokernel.dim for v in q.vertices if v not in V
        )
    return PeelResult(V, summands, sub, inc, quot, proj, checks)


@dataclass(frozen=True)
class FiltrationStep:
    vertex_set: tuple[str, ...]
    summands: tuple[tuple[str, object], ...]
    iso: RepMorphism  # F_{i+1}/F_i -> ⊕ f_v(X_v)
    iso_inverse: RepMorphism


@dataclass(frozen=True)
class FiltrationCertificate:
    """``0 = F_0 ⊆ F_1 ⊆ … ⊆ F_n = F`` with ``F_{i+1}/F_i ≅ ⊕ f_v(X_v)``.

    ``chain[i]`` is the inclusion ``F_{i+1} -> F``.
    """

    target: Representation
    chain: tuple[RepMorphism, ...]
    steps: tuple[FiltrationStep, ...]
    cls: str = "all"

    @property
    def length(self) -> int:
        return len(self.steps)

    def dims(self) -> list[tuple[int, ...]]:
        return [inc.domain.dims() for inc in self.chain]


@dataclass(frozen=True)
class CertificateVerdict:
    ok: bool
    failing_step: int | None = None
    check: str = ""
    detail: str = ""
    checks_run: int = 0

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failing_step": self.failing_step,
            "check": self.check,
            "detail": self.detail,
            "checks_run": self.checks_run,
        }


def _subquotient(prev_inc: RepMorphism, inc: RepMorphism):
    """``F_i ⊆ F_{i+1}`` as a map, and the quotient ``F_{i+1}/F_i`` with its projection."""
    cat = inc.category
    u = factor_through_mono(inc, prev_inc)
    if u is None:
        return None
    quot, proj = cat.cokernel(u)
    return u, quot, proj


def filtrate(F: Representation, membership="all") -> FiltrationCertificate:
    cls = object_class(membership)
    q, inner = F.quiver, F.inner
    cat = RepCat(q, inner)
    verdict = in_phi(F, cls)
    if not verdict.holds:
        raise NotInPhi(f"not in Φ({cls.name}): vertex {verdict.failing_vertex}, {verdict.reason}")
    seq = v_sequence(q)
    if seq[-1] != frozenset(q.vertices):
        raise ValidationError("the quiver is not left-rooted")

    zero = cat.zero_object()
    current = cat.zero_morphism(zero, F)
    chain, steps = [], []
    seen = frozenset()
    while True:
        Q, to_q = cat.cokernel(current)
        if Q.dim == 0:
            break
        i = len(steps)
        if i >= len(seq) - 1:
            raise InternalInconsistency("filtration did not terminate within the V-sequence bound")
        peel = peel_step(Q, check_phi=False)
        if not (peel.vertices >= seen and peel.vertices >= seq[i + 1]):
            raise InternalInconsistency("peeled vertex sets are not increasing along the V-sequence")
        seen = peel.vertices
        _, to_rest = cat.cokernel(peel.inclusion)
        sub, inc = cat.kernel(cat.compose(to_rest, to_q))
        # F_{i+1} -> Q lands in the peeled part; lift it and descend to the quotient
        m = factor_through_mono(peel.inclusion, cat.compose(to_q, inc))
        u, quot, proj = _subquotient(current, inc)
        if m is None or u is None:
            raise InternalInconsistency("pullback square does not factor")
        theta = factor_through_epi(proj, m)
        if theta is None or not is_iso(theta):
            raise InternalInconsistency("quotient is not isomorphic to the peeled sum")
        inv = cat.from_matrix(theta.codomain, theta.domain, theta.matrix.inverse(), check=False)
        for v, X in peel.summands:
            if not cls(X):
                raise NotInPhi(f"summand at vertex {v} is not in {cls.name}")
        steps.append(FiltrationStep(tuple(v for v in q.vertices if v in peel.vertices), peel.summands, theta, inv))
        chain.append(inc)
        current = inc
    return FiltrationCertificate(F, tuple(chain), tuple(steps), cls.name)


def verify_certificate(F: Representation, cert: FiltrationCertificate, membership=None) -> CertificateVerdict:
    """Recheck a certificate from scratch; reports the first failing check."""
    cls = object_class(membership or cert.cls)
    cat = RepCat(F.quiver, F.inner)
    n = 0

    def fail(i, check, detail=""):
        return CertificateVerdict(False, i, check, detail, n)

    if len(cert.chain) != len(cert.steps):
        return fail(None, "shape", "chain and steps differ in length")
    prev = cat.zero_morphism(cat.zero_object(), F)
    for i, (inc, step) in enumerate(zip(cert.chain, cert.steps)):
        n += 1
        if inc.codomain != F:
            return fail(i, "codomain", "inclusion does not land in the target")
        try:
            cat.check_morphism(inc)
        except ValidationError as exc:
            return fail(i, "morphism", str(exc))
        if not is_monic(inc):
            return fail(i, "monic", "inclusion is not monic")
        n += 1
        sq = _subquotient(prev, inc)
        if sq is None:
            return fail(i, "nested", "previous subobject is not contained in this one")
        _, quot, _ = sq
        n += 1
        parts = [free_f(v, X, F.quiver) for v, X in step.summands]
        target = cat.direct_sum(parts)
        th, inv = step.iso, step.iso_inverse
        if th.domain != quot or th.codomain != target or inv.domain != target or inv.codomain != quot:
            return fail(i, "iso_endpoints", "iso does not connect the quotient with the stated sum")
        try:
            cat.check_morphism(th)
            cat.check_morphism(inv)
        except ValidationError as exc:
            return fail(i, "iso_morphism", str(exc))
        n += 1
        if cat.compose(inv, th).matrix != Matrix.identity(cat.field, quot.dim):
            return fail(i, "iso", "inverse ∘ iso is not the identity")
        if cat.compose(th, inv).matrix != Matrix.identity(cat.field, target.dim):
            return fail(i, "iso", "iso ∘ inverse is not the identity")
        for v, X in step.summands:
            n += 1
            if not cls(X):
                return fail(i, "class", f"summand at vertex {v} is not in {cls.name}")
        prev = inc
    n += 1
    if cert.chain:
        if cert.chain[-1].domain.dim != F.dim:
            return fail(len(cert.chain) - 1, "exhaustive", "chain does not end at the target")
    elif F.dim:
        return fail(None, "exhaustive", "empty chain for a nonzero target")
    return CertificateVerdict(True, None, "", "", n)

"""Seeded audits comparing Φ/Ψ-side classifications with category-side oracles.

Each sample draws from ``numpy.random.default_rng([seed, index])``, so the
report does not depend on how samples are split across workers
(``REPKIT_THREADS``). Reports carry no timings and serialize to identical
bytes for identical ``(theorem, samples, seed)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .abcat import NilMod, Vect
from .adjoint import adjunction_audit
from .catalog import example_quiver
from .errors import RepkitError, ValidationError
from .filtration import filtrate, verify_certificate
from .generators import break_monic, random_nilmod_object, random_phi_rep, random_quiver
from .gorenstein import is_ginj, is_gproj, is_injective_rep, is_projective_rep, rep_gproj_witness, verify_total_acyclicity
from .linalg import GF
from .phipsi import duality_bridge, in_phi
from .quiver import v_sequence
from .serialize import certificate_to_json, digest, dumps, rep_to_json

__all__ = ["THEOREMS", "AuditReport", "theorem_audit", "run_sample", "worker_count"]


@dataclass(frozen=True)
class AuditReport:
    theorem: str
    seed: int
    samples: int
    instance: str
    records: tuple

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.records if not r["agree"]]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        out = {
            "type": "summary",
            "theorem": self.theorem,
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed,
            "failures": len(self.failures),
        }
        for key in ("negatives", "positives"):
            vals = [r.get(key, 0) for r in self.records]
            out[key] = sum(vals)
        return out

    def to_jsonl(self) -> str:
        head = {"type": "header", "theorem": self.theorem, "instance": self.instance, "seed": self.seed, "samples": self.samples}
        lines = [dumps(head)] + [dumps({"type": "sample", **r}) for r in self.records] + [dumps(self.summary())]
        return "\n".join(lines) + "\n"


# instances ---------------------------------------------------------------------

_NIL = NilMod(GF(3), 2)


def _nil_sample(rng: np.random.Generator, kind: int):
    """Sample types: 0 projective cokernels, 1 a non-projective cokernel, 2 non-monic, 3 mixed."""
    q, N = example_quiver(), _NIL
    if kind == 0:
        F = random_phi_rep(q, N, rng, cokernel=lambda v, r: random_nilmod_object(N, r, blocks=[2] * int(r.integers(0, 2))))
    elif kind == 1:
        bad = q.vertices[int(rng.integers(0, len(q.vertices)))]

        def coker(v, r):
            if v == bad:
                return random_nilmod_object(N, r, blocks=[1] + [2] * int(r.integers(0, 2)))
            return random_nilmod_object(N, r, blocks=[2] * int(r.integers(0, 2)))

        F = random_phi_rep(q, N, rng, cokernel=coker)
    elif kind == 2:
        def coker(v, r):
            if v in ("1", "2"):
                return random_nilmod_object(N, r, blocks=[int(r.integers(1, 3))])
            return random_nilmod_object(N, r, max_blocks=1)

        F = break_monic(random_phi_rep(q, N, rng, cokernel=coker), rng)
    else:
        F = random_phi_rep(q, N, rng, cokernel=lambda v, r: random_nilmod_object(N, r, max_blocks=1))
    return F


def _sample_A(seed: int, i: int) -> dict:
    rng = np.random.default_rng([seed, i])
    q = random_quiver(rng, 8, 12)
    F = random_phi_rep(q, Vect(GF(5)), rng, max_dim=4)
    cert = filtrate(F, "all")
    verdict = verify_certificate(F, cert)
    bound = len(v_sequence(q)) - 1
    ok = verdict.ok and cert.length <= bound
    return {
        "index": i,
        "vertices": len(q.vertices),
        "arrows": len(q.arrows),
        "dims": list(F.dims()),
        "steps": cert.length,
        "v_sequence_length": len(v_sequence(q)),
        "verified": verdict.ok,
        "certificate": digest(certificate_to_json(cert)),
        "agree": ok,
    }


def _sample_34(seed: int, i: int) -> dict:
    rng = np.random.default_rng([seed, i])
    kind = i % 4
    F = _nil_sample(rng, kind)
    phi_proj = in_phi(F, "proj").holds
    phi_gproj = in_phi(F, "gproj").holds
    cat_proj = is_projective_rep(F).holds
    cat_gproj = is_gproj(F, method="ext", build_witness=False).holds
    witness_ok = None
    if cat_gproj:
        witness_ok = verify_total_acyclicity(rep_gproj_witness(F)).ok
    agree = phi_proj == cat_proj and phi_gproj == cat_gproj and witness_ok is not False
    return {
        "index": i,
        "kind": kind,
        "dims": list(F.dims()),
        "phi_proj": phi_proj,
        "split_proj": cat_proj,
        "phi_gproj": phi_gproj,
        "ext_gproj": cat_gproj,
        "witness_verified": witness_ok,
        "negatives": int(kind in (1, 2) and not cat_proj),
        "positives": int(cat_proj),
        "evidence": digest(rep_to_json(F)),
        "agree": agree,
    }


def _sample_C(seed: int, i: int) -> dict:
    rng = np.random.default_rng([seed, i])
    kind = i % 4
    F = _nil_sample(rng, kind)
    Fd = F.category.dual_object(F)
    phi_flat = in_phi(F, "flat").holds
    dual_inj = is_injective_rep(Fd).holds
    phi_wg = in_phi(F, "wgflat").holds
    dual_ginj = is_ginj(Fd, method="ext", build_witness=False).holds
    return {
        "index": i,
        "kind": kind,
        "dims": list(F.dims()),
        "phi_flat": phi_flat,
        "dual_injective": dual_inj,
        "phi_wgflat": phi_wg,
        "dual_ginj": dual_ginj,
        "negatives": int(not dual_inj),
        "positives": int(dual_inj),
        "evidence": digest(rep_to_json(F)),
        "agree": phi_flat == dual_inj and phi_wg == dual_ginj,
    }


def _sample_bridge(seed: int, i: int) -> dict:
    rng = np.random.default_rng([seed, i])
    F = _nil_sample(rng, i % 4)
    rep = duality_bridge(F, "all")
    return {
        "index": i,
        "dims": list(F.dims()),
        "equal_at": rep.equal_at,
        "phi_member": rep.phi_member,
        "psi_member": rep.psi_member,
        "evidence": digest(rep_to_json(F)),
        "agree": rep.ok,
    }


def _sample_adjunction(seed: int, i: int) -> dict:
    rng = np.random.default_rng([seed, i])
    q = example_quiver()
    F = _nil_sample(rng, i % 4)
    v = q.vertices[int(rng.integers(0, len(q.vertices)))]
    X = random_nilmod_object(_NIL, rng, max_blocks=2)
    try:
        rep = adjunction_audit(v, X, F).to_dict()
        ok = rep["ok"]
    except RepkitError as exc:
        rep, ok = {"error": str(exc)}, False
    return {"index": i, "vertex": v, "x_dim": X.dim, "dims": list(F.dims()), "report": rep, "agree": ok}


THEOREMS = {
    "A": (_sample_A, "Vect(F5), random acyclic quivers (<=8 vertices, <=12 arrows, dims <=4)"),
    "3.4": (_sample_34, "NilMod(F3, n=2) on the five-vertex example quiver"),
    "C": (_sample_C, "NilMod(F3, n=2) on the five-vertex example quiver"),
    "bridge": (_sample_bridge, "NilMod(F3, n=2) on the five-vertex example quiver"),
    "adjunction": (_sample_adjunction, "NilMod(F3, n=2) on the five-vertex example quiver"),
}


def run_sample(theorem: str, seed: int, i: int) -> dict:
    fn, _ = THEOREMS[theorem]
    return fn(seed, i)


def _run_chunk(args):
    theorem, seed, idx = args
    return [run_sample(theorem, seed, i) for i in idx]


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("REPKIT_THREADS", "1")))
    except ValueError:
        return 1


def theorem_audit(theorem: str, samples: int = 100, seed: int = 0, workers: int | None = None) -> AuditReport:
    if theorem not in THEOREMS:
        raise ValidationError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    workers = workers or worker_count()
    idx = list(range(samples))
    if workers <= 1 or samples < 2:
        records = _run_chunk((theorem, seed, idx))
    else:
        chunks = [idx[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_run_chunk, [(theorem, seed, c) for c in chunks]))
        records = sorted((r for part in parts for r in part), key=lambda r: r["index"])
    return AuditReport(theorem, seed, samples, THEOREMS[theorem][1], tuple(records))

"""Exact computations with quiver representations over small abelian categories."""

from .abcat import NilMod, Vect
from .adjoint import adjunction_audit, cofree_g, eval_e, free_f
from .audit import theorem_audit
from .filtration import filtrate, verify_certificate
from .gorenstein import (
    flat_right_resolution,
    is_flat,
    is_ginj,
    is_gproj,
    is_injective_rep,
    is_projective_rep,
    is_wgflat,
    verify_total_acyclicity,
)
from .linalg import GF, QQ, Matrix
from .phipsi import duality_bridge, in_phi, in_psi, phi_map, psi_map
from .quiver import Arrow, Quiver, classify_quiver, enumerate_paths, v_sequence
from .rep import RepCat, Representation, RepMorphism

__version__ = "1.0.0"

__all__ = [
    "GF",
    "QQ",
    "Matrix",
    "Arrow",
    "Quiver",
    "classify_quiver",
    "enumerate_paths",
    "v_sequence",
    "Vect",
    "NilMod",
    "RepCat",
    "Representation",
    "RepMorphism",
    "free_f",
    "cofree_g",
    "eval_e",
    "adjunction_audit",
    "phi_map",
    "psi_map",
    "in_phi",
    "in_psi",
    "duality_bridge",
    "filtrate",
    "verify_certificate",
    "is_projective_rep",
    "is_injective_rep",
    "is_gproj",
    "is_ginj",
    "is_flat",
    "is_wgflat",
    "flat_right_resolution",
    "verify_total_acyclicity",
    "theorem_audit",
]

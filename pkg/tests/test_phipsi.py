import numpy as np
import pytest
from hypothesis import given, settings

from conftest import random_nil_rep, seeds
from repkit.abcat import NilMod, Vect
from repkit.adjoint import cofree_g, free_f
from repkit.catalog import all_k_representation, example_quiver
from repkit.errors import ValidationError
from repkit.generators import random_extension, random_nilmod_object, random_phi_rep
from repkit.linalg import GF, QQ, Matrix
from repkit.phipsi import duality_bridge, in_phi, in_psi, object_class, phi_map, phi_report, psi_report
from repkit.quiver import Arrow, Quiver
from repkit.rep import Representation, rep_dualize

V = Vect(QQ)
K2 = NilMod(GF(3), 2)
Q = example_quiver()


def test_all_k_phi():
    F = all_k_representation()
    rep = phi_report(F)
    e = rep["3"]
    assert e.map.matrix.shape == (3, 2) and e.monic and e.cokernel.dim == 1
    assert rep["1"].monic and rep["1"].map.domain.dim == 0 and rep["1"].cokernel.dim == 1
    assert in_phi(F).holds
    assert [d["coker_dim"] for d in in_phi(F).evidence] == [1, 1, 1, 1, 0]


def test_non_monic():
    F = Representation(Q, V, {"1": V.obj(1)}, {})
    rep = phi_report(F)
    assert not rep["3"].monic
    v = in_phi(F)
    assert not v.holds and v.failing_vertex == "3"


def test_free_in_phi_of_its_class():
    X = K2.simple()
    F = free_f("3", X, Q)
    v = in_phi(F, "zero")
    assert not v.holds and v.failing_vertex == "3"
    assert [d["coker_dim"] for d in in_phi(F).evidence] == [0, 0, 1, 0, 0]


def test_cofree_psi():
    G = cofree_g("4", K2.simple(), Q)
    rep = psi_report(G)
    for w in Q.vertices:
        if w != "4":
            assert rep[w].epi and rep[w].kernel.dim == 0
    assert rep["4"].kernel.dim == 1


def test_dual_psi_and_bridge():
    F = all_k_representation()
    D = rep_dualize(F)
    assert psi_report(D)["1"].epi  # vertex 1 is a sink of the opposite quiver
    assert in_psi(D).holds
    b = duality_bridge(F)
    assert b.equal_at == {v: True for v in Q.vertices} and b.ok
    Z = F.category.zero_object()
    assert duality_bridge(Z).ok


def test_classes():
    assert object_class("gproj").dual_name == "ginj"
    assert object_class("flat").dual_name == "inj"
    with pytest.raises(ValidationError):
        object_class("nope")


@settings(max_examples=30)
@given(seeds)
def test_bridge_random(seed):
    F = random_nil_rep(seed)
    b = duality_bridge(F, "all")
    assert b.ok
    b = duality_bridge(F, "proj")
    assert b.implication_holds


def test_permuting_arrows_permutes_columns():
    F = all_k_representation()
    q2 = Quiver(Q.vertices, (Q.arrow("a1"), Q.arrow("a2"), Arrow("b4", "3", "4"), Arrow("b3", "3", "4"), Q.arrow("a5")))
    # b4 is declared before b3 and carries a4's map
    arrows = {"a1": F.at_arrow["a1"], "a2": F.at_arrow["a2"], "b4": F.at_arrow["a4"], "b3": F.at_arrow["a3"], "a5": F.at_arrow["a5"]}
    G = Representation(q2, V, dict(F.at_vertex), arrows)
    lhs, rhs = phi_map(F, "4").matrix, phi_map(G, "4").matrix
    assert Matrix(QQ, lhs.array[:, [3, 4, 5, 0, 1, 2]].tolist()) == rhs
    assert phi_report(F)["4"].cokernel.dim == phi_report(G)["4"].cokernel.dim == 1


@settings(max_examples=5)
@given(seeds)
def test_phi_closed_under_extensions(seed):
    rng = np.random.default_rng(seed)
    proj_coker = lambda v, r: random_nilmod_object(K2, r, blocks=[2] * int(r.integers(0, 2)))  # noqa: E731
    A = random_phi_rep(Q, K2, rng, cokernel=proj_coker)
    C = random_phi_rep(Q, K2, rng, cokernel=lambda v, r: random_nilmod_object(K2, r, max_blocks=1))
    E, i = random_extension(A, C, rng)
    assert E.dims() == tuple(a + c for a, c in zip(A.dims(), C.dims()))
    ve, va, vc = in_phi(E), in_phi(A), in_phi(C)
    assert ve.holds
    ce = [d["coker_dim"] for d in ve.evidence]
    assert ce == [a["coker_dim"] + c["coker_dim"] for a, c in zip(va.evidence, vc.evidence)]
    A2 = random_phi_rep(Q, K2, rng, cokernel=proj_coker)
    E2, _ = random_extension(A, A2, rng)
    assert in_phi(E2, "proj").holds


@settings(max_examples=15)
@given(seeds)
def test_phi_closed_under_sums(seed):
    F, G = random_nil_rep(seed, 0), random_nil_rep(seed + 1, 1)
    S = F.category.direct_sum([F, G])
    for cls in ("all", "proj", "gproj"):
        assert in_phi(S, cls).holds == (in_phi(F, cls).holds and in_phi(G, cls).holds)


@settings(max_examples=15)
@given(seeds)
def test_phi_lies_pointwise_in_class(seed):
    # finite acyclic quiver: each F(v) is an iterated extension of cokernels
    F = random_nil_rep(seed)
    for cls in ("proj", "gproj", "flat"):
        if in_phi(F, cls).holds:
            member = object_class(cls)
            assert all(member(F.at_vertex[v]) for v in F.quiver.vertices)

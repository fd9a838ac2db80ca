import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import seeds
from repkit.abcat import NilMod, Vect
from repkit.adjoint import cofree_g, free_f
from repkit.catalog import a2_quiver, all_k_representation, example_quiver
from repkit.errors import CapabilityMissing
from repkit.generators import random_extension, random_nilmod_object
from repkit.gorenstein import (
    CompleteResolution,
    ext1_dim,
    flat_right_resolution,
    glue_extension,
    is_flat,
    is_ginj,
    is_gproj,
    is_injective_rep,
    is_projective_rep,
    is_wgflat,
    lift_free,
    nilmod_witness,
    verify_total_acyclicity,
)
from repkit.linalg import GF, QQ, Matrix
from repkit.rep import Representation

V = Vect(QQ)
K2 = NilMod(GF(3), 2)
K3 = NilMod(GF(3), 3)
Q = example_quiver()


def test_split_projectivity():
    assert is_projective_rep(free_f("3", K2.regular(), Q)).holds
    assert not is_projective_rep(free_f("3", K2.simple(), Q)).holds
    assert is_projective_rep(all_k_representation()).holds
    assert not is_projective_rep(cofree_g("5", K2.simple(), Q)).holds
    assert is_injective_rep(cofree_g("3", K2.regular(), Q)).holds
    assert not is_injective_rep(free_f("5", K2.simple(), Q)).holds


def test_witness_k_over_k2():
    c = nilmod_witness(K2.simple())
    assert c.period == 1
    R = K2.regular()
    assert c.objects == (R,) and c.d(0).matrix == R.action
    assert verify_total_acyclicity(c).ok


def test_witnesses_over_k3():
    for s, period in ((1, 2), (2, 2), (3, 2)):
        c = nilmod_witness(K3.jordan_object([s]))
        assert c.period == period
        assert verify_total_acyclicity(c).ok
    c = nilmod_witness(K3.jordan_object([1]))
    # the two syzygies are k[x]/(x) and k[x]/(x²)
    kers = sorted(K3.jordan_blocks(K3.kernel(c.d(i))[0]) for i in range(2))
    assert kers == [(1,), (2,)]


def test_zero_differential_not_exact():
    R = K2.regular()
    c = CompleteResolution(K2.simple(), K2.from_matrix(K2.simple(), R, Matrix(GF(3), [[0], [1]])), (R,), (K2.zero_morphism(R, R),))
    v = verify_total_acyclicity(c)
    assert not v.exact and not v.ok


def test_non_projective_objects_rejected():
    k = K2.simple()
    c = CompleteResolution(k, K2.identity(k), (k,), (K2.zero_morphism(k, k),))
    assert not verify_total_acyclicity(c).objects_ok


def test_gproj_examples():
    v = is_gproj(K2.simple())
    assert v.holds and v.witness.period == 1
    A2 = Representation(a2_quiver(), V, {"1": V.obj(1)}, {})
    assert not is_gproj(A2).holds
    F = free_f("3", K2.simple(), Q)
    for method in ("phi", "ext"):
        v = is_gproj(F, method=method)
        assert v.holds
        assert verify_total_acyclicity(v.witness).ok
    assert is_gproj(F, method="ext").evidence["ext1"] == {w: 0 for w in Q.vertices}


def test_lifted_witness():
    c = nilmod_witness(K2.simple())
    lifted = lift_free("3", c, Q)
    assert lifted.syzygy == free_f("3", K2.simple(), Q)
    assert verify_total_acyclicity(lifted).ok


def test_ext1():
    k, R = K2.simple(), K2.regular()
    assert ext1_dim(k, k) == 1
    assert ext1_dim(R, k) == 0 and ext1_dim(k, R) == 0
    A2 = Representation(a2_quiver(), V, {"1": V.obj(1)}, {})
    S2 = Representation(a2_quiver(), V, {"2": V.obj(1)}, {})
    assert ext1_dim(A2, S2) == 1 and ext1_dim(S2, A2) == 0


def test_flat_examples():
    k, R = K2.simple(), K2.regular()
    assert is_flat(R) and not is_flat(k)
    assert is_wgflat(k) and is_wgflat(R)
    Z = K2.zero_object()
    assert is_flat(Z) and is_wgflat(Z)


def test_flat_resolution_k():
    res = flat_right_resolution(K2.simple(), 3)
    assert [K2.jordan_blocks(o) for o in res.objects] == [(2,)] * 3
    assert all(K2.jordan_blocks(K2.kernel(d)[0]) == (1,) and d.matrix.rank() == 1 for d in res.differentials)
    assert res.ext_checks == (0, 0, 0)
    assert res.left_matches
    assert verify_total_acyclicity(res.complete).ok


def test_flat_resolution_R_and_sum():
    R = K2.regular()
    res = flat_right_resolution(R, 3)
    assert [K2.jordan_blocks(o) for o in res.objects] == [(2,)] and res.cosyzygies[0].dim == 0
    assert verify_total_acyclicity(res.complete).ok
    x = K2.direct_sum([K2.simple(), R])
    res = flat_right_resolution(x, 3)
    assert [o.dim for o in res.objects] == [4, 2, 2]
    assert verify_total_acyclicity(res.complete).ok


def test_capabilities():
    with pytest.raises(CapabilityMissing):
        flat_right_resolution(V.obj(1))


nil = st.sampled_from([NilMod(GF(2), 2), NilMod(GF(3), 2), NilMod(GF(3), 3), NilMod(GF(2), 4)])


@settings(max_examples=30)
@given(nil, seeds)
def test_syzygy_closure_and_duality(cat, seed):
    rng = np.random.default_rng(seed)
    x = random_nilmod_object(cat, rng, max_blocks=3)
    v = is_gproj(x)
    assert v.holds and verify_total_acyclicity(v.witness).ok
    for i in range(v.witness.period):
        k, _ = cat.kernel(v.witness.d(i))
        assert is_gproj(k).holds
    assert is_ginj(cat.dual_object(x)).holds == v.holds
    w = is_ginj(x).witness
    assert w.kind == "injective" and verify_total_acyclicity(w).ok


@settings(max_examples=20)
@given(nil, seeds)
def test_flat_resolution_always_succeeds(cat, seed):
    x = random_nilmod_object(cat, np.random.default_rng(seed), max_blocks=3)
    res = flat_right_resolution(x, 3)
    assert all(is_flat(o) for o in res.objects)
    assert not any(res.ext_checks)
    assert res.left_matches
    assert verify_total_acyclicity(res.complete).ok


@settings(max_examples=10)
@given(seeds)
def test_lemma_lift_random(seed):
    rng = np.random.default_rng(seed)
    x = random_nilmod_object(K2, rng)
    v = Q.vertices[int(rng.integers(0, 5))]
    assert verify_total_acyclicity(lift_free(v, nilmod_witness(x), Q)).ok


@settings(max_examples=15)
@given(nil, seeds)
def test_glued_witness_verifies(cat, seed):
    rng = np.random.default_rng(seed)
    a, c = random_nilmod_object(cat, rng), random_nilmod_object(cat, rng)
    b, iota = random_extension(a, c, rng)
    pi = cat.cokernel(iota)[1]
    c_obj = pi.codomain
    w = glue_extension(nilmod_witness(a), nilmod_witness(c_obj), iota, pi)
    assert w.syzygy == b
    assert verify_total_acyclicity(w).ok

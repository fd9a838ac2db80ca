import numpy as np
from hypothesis import given, settings

from conftest import random_nil_rep, seeds
from repkit.abcat import NilMod, Vect
from repkit.adjoint import adjunction_audit, cofree_g, eval_e, free_f, g_unit, f_counit
from repkit.catalog import all_k_representation, example_quiver
from repkit.generators import random_nilmod_object, random_quiver
from repkit.gorenstein import is_projective_rep
from repkit.linalg import GF, QQ
from repkit.phipsi import phi_report
from repkit.quiver import opposite
from repkit.rep import rep_dualize

V = Vect(QQ)
K2 = NilMod(GF(3), 2)
Q = example_quiver()


def test_free_and_cofree_dims():
    k = V.obj(1)
    assert free_f("1", k, Q).dims() == (1, 0, 1, 2, 2)
    assert free_f("4", k, Q).dims() == (0, 0, 0, 1, 1)
    assert cofree_g("5", k, Q).dims() == (2, 2, 2, 1, 1)
    assert free_f("2", V.obj(0), Q).dim == 0
    assert cofree_g("2", V.obj(0), Q).dim == 0


def test_eval():
    F = all_k_representation()
    assert eval_e("3", F).dim == 3
    assert eval_e("3", F.category.zero_object()).dim == 0
    S = F.category.direct_sum([F, F])
    assert eval_e("4", S).dim == 14


def test_adjunction_on_all_k():
    F = all_k_representation()
    rep = adjunction_audit("1", V.obj(1), F)
    assert rep.hom_f_side == rep.hom_e_side == 1
    rep = adjunction_audit("5", V.obj(1), F)
    assert rep.hom_e_dual_side == rep.hom_g_side == 7
    assert rep.ok


def test_triangle_at_vertex3():
    X = V.obj(1)
    rep = adjunction_audit("3", X, free_f("3", X, Q))
    assert rep.ok and all(rep.triangles.values())


def test_counit_and_unit_shapes():
    F = all_k_representation()
    eps = f_counit("3", F)
    assert eps.domain.dims() == free_f("3", F.at_vertex["3"], Q).dims()
    eta = g_unit("3", F)
    assert eta.codomain.dims() == cofree_g("3", F.at_vertex["3"], Q).dims()


@settings(max_examples=25)
@given(seeds)
def test_remark_shape(seed):
    rng = np.random.default_rng(seed)
    q = random_quiver(rng, 6, 8)
    v = q.vertices[int(rng.integers(0, len(q.vertices)))]
    X = random_nilmod_object(K2, rng, max_blocks=2)
    rep = phi_report(free_f(v, X, q))
    for w in q.vertices:
        e = rep[w]
        if w == v:
            assert e.map.matrix.is_zero() and e.cokernel.dim == X.dim
            assert K2.jordan_blocks(e.cokernel) == K2.jordan_blocks(X)
        else:
            assert e.monic and e.cokernel.dim == 0


@settings(max_examples=25)
@given(seeds)
def test_adjunction_random_triples(seed):
    rng = np.random.default_rng(seed)
    F = random_nil_rep(seed)
    v = Q.vertices[int(rng.integers(0, 5))]
    X = random_nilmod_object(K2, rng)
    assert adjunction_audit(v, X, F).ok


@settings(max_examples=10)
@given(seeds)
def test_free_preserves_projectives(seed):
    rng = np.random.default_rng(seed)
    v = Q.vertices[int(rng.integers(0, 5))]
    m = int(rng.integers(0, 3))
    assert is_projective_rep(free_f(v, K2.jordan_object([2] * m), Q)).holds


@settings(max_examples=15)
@given(seeds)
def test_dual_of_free_is_cofree(seed):
    rng = np.random.default_rng(seed)
    v = Q.vertices[int(rng.integers(0, 5))]
    X = random_nilmod_object(K2, rng)
    lhs = rep_dualize(free_f(v, X, Q))
    rhs = cofree_g(v, K2.dual_object(X), opposite(Q))
    assert lhs.dims() == rhs.dims()
    assert lhs.category.hom_dim(lhs, rhs) >= 1 or X.dim == 0

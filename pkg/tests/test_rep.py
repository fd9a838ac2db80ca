import numpy as np
import pytest
from hypothesis import given, settings

from conftest import random_nil_rep, seeds
from repkit.abcat import Vect, is_epi, is_monic
from repkit.adjoint import free_f
from repkit.catalog import a2_quiver, all_k_representation, example_quiver
from repkit.errors import ValidationError
from repkit.filtration import filtrate
from repkit.generators import random_morphism
from repkit.linalg import QQ, Matrix
from repkit.quiver import Quiver, opposite
from repkit.rep import RepCat, Representation, as_instance, rep_dualize, rep_hom_basis, rep_kernel_cokernel, validate

V = Vect(QQ)


def test_all_k_valid():
    F = all_k_representation()
    assert validate(F) == []
    assert F.dims() == (1, 1, 3, 7, 7)


def test_shape_mismatch_names_arrow():
    q = a2_quiver()
    with pytest.raises(ValidationError, match="a"):
        Representation(q, V, {"1": V.obj(1), "2": V.obj(2)}, {"a": Matrix.zeros(QQ, 3, 1)})


def test_empty_quiver():
    F = Representation(Quiver((), ()), V, {}, {})
    assert validate(F) == [] and F.dim == 0


def test_hom_examples():
    F = all_k_representation()
    assert len(rep_hom_basis(F, F)) >= 1
    assert len(rep_hom_basis(free_f("1", V.obj(1), example_quiver()), F)) == 1
    q = a2_quiver()
    at1 = Representation(q, V, {"1": V.obj(2)}, {})
    at2 = Representation(q, V, {"2": V.obj(3)}, {})
    assert rep_hom_basis(at1, at2) == [] and rep_hom_basis(at2, at1) == []


def test_kernel_cokernel_examples():
    F = all_k_representation()
    cat = F.category
    kc = rep_kernel_cokernel(cat.identity(F))
    assert kc.kernel.dim == 0 and kc.cokernel.dim == 0
    kc = rep_kernel_cokernel(cat.zero_morphism(F, F))
    assert kc.kernel.dims() == F.dims() and kc.cokernel.dims() == F.dims()
    inc = filtrate(F).chain[0]
    assert rep_kernel_cokernel(inc).cokernel.dims() == (0, 0, 1, 3, 3)


def test_dualize_examples():
    F = all_k_representation()
    D = rep_dualize(F)
    assert D.quiver == opposite(F.quiver)
    assert D.dims() == (1, 1, 3, 7, 7)
    assert rep_dualize(D) == F
    # monic arrows become epi arrows
    assert all(D.at_arrow[a].matrix.rank() == D.at_arrow[a].codomain.dim for a in D.at_arrow)


def test_adapter_agrees():
    q = a2_quiver()
    cat = as_instance(q, V)
    assert isinstance(cat, RepCat)
    F = Representation(q, V, {"1": V.obj(1), "2": V.obj(2)}, {"a": Matrix(QQ, [[1], [0]])})
    G = Representation(q, V, {"1": V.obj(2), "2": V.obj(1)}, {"a": Matrix(QQ, [[0, 1]])})
    assert cat.hom_dim(F, G) == len(rep_hom_basis(F, G))
    eta = rep_hom_basis(F, G)[0]
    k1, _ = cat.kernel(eta)
    assert k1.dims() == rep_kernel_cokernel(eta).kernel.dims()


def test_from_matrix_checks_blocks():
    F = all_k_representation()
    cat = F.category
    m = cat.identity(F).matrix
    bad = Matrix(QQ, [[1 if (i, j) in {(0, 1)} or i == j else 0 for j in range(m.cols)] for i in range(m.rows)])
    with pytest.raises(ValidationError):
        cat.from_matrix(F, F, bad)


def test_rejects_cycles_and_nesting():
    from repkit.catalog import loop_quiver

    with pytest.raises(ValidationError):
        RepCat(loop_quiver(), V)
    inner = RepCat(a2_quiver(), V)
    mid = RepCat(a2_quiver(), inner)
    with pytest.raises(ValidationError):
        RepCat(a2_quiver(), mid)


@settings(max_examples=20)
@given(seeds)
def test_pointwise_exactness_and_duality(seed):
    rng = np.random.default_rng(seed)
    F, G = random_nil_rep(seed), random_nil_rep(seed + 1)
    cat = F.category
    eta = random_morphism(F, G, rng)
    assert is_monic(eta) == all(c.matrix.rank() == c.domain.dim for c in eta.components.values())
    assert is_epi(eta) == all(c.matrix.rank() == c.codomain.dim for c in eta.components.values())
    d = rep_dualize(eta)
    assert is_monic(eta) == is_epi(d)
    assert cat.compose(eta, cat.identity(F)).matrix == eta.matrix


@settings(max_examples=20)
@given(seeds)
def test_hom_additive(seed):
    F, F2, G = random_nil_rep(seed), random_nil_rep(seed + 7), random_nil_rep(seed + 13)
    cat = F.category
    S = cat.direct_sum([F, F2])
    assert cat.hom_dim(S, G) == cat.hom_dim(F, G) + cat.hom_dim(F2, G)
    assert cat.hom_dim(G, S) == cat.hom_dim(G, F) + cat.hom_dim(G, F2)


@settings(max_examples=20)
@given(seeds)
def test_hom_basis_members_commute(seed):
    F, G = random_nil_rep(seed), random_nil_rep(seed + 3)
    basis = rep_hom_basis(F, G)
    assert len(basis) == F.category.hom_dim(F, G)
    for eta in basis:
        F.category.check_morphism(eta)

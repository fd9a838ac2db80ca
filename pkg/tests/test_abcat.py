import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import seeds
from repkit.abcat import (
    NilMod,
    Vect,
    biproduct,
    coordinates,
    double_dual_iso,
    dualize,
    hom_basis,
    hom_dimension,
    is_epi,
    is_iso,
    is_monic,
    kernel_cokernel,
    projective_injective_test,
)
from repkit.errors import IntertwinerViolation, NotNilpotent, ValidationError
from repkit.generators import random_morphism, random_nilmod_object
from repkit.linalg import GF, QQ, Matrix

K2 = NilMod(GF(3), 2)


def times_x(cat):
    R = cat.regular()
    return cat.from_matrix(R, R, R.action)


def test_vect_kernel_cokernel():
    V = Vect(QQ)
    k = V.obj(1)
    kc = kernel_cokernel(V.zero_morphism(k, k))
    assert kc.kernel.dim == 1 and kc.cokernel.dim == 1
    kc = kernel_cokernel(V.identity(V.obj(3)))
    assert kc.kernel.dim == 0 and kc.cokernel.dim == 0


def test_nilmod_multiplication_by_x():
    kc = kernel_cokernel(times_x(K2))
    assert kc.kernel.dim == 1 and kc.kernel.action.is_zero()
    assert kc.cokernel.dim == 1 and kc.cokernel.action.is_zero()


def test_hom_dims():
    V = Vect(QQ)
    assert hom_dimension(V.obj(2), V.obj(3)) == 6
    k, R = K2.simple(), K2.regular()
    assert hom_dimension(k, R) == 1
    assert hom_dimension(R, R) == 2
    assert hom_dimension(k, k) == 1
    with pytest.raises(ValidationError):
        hom_dimension(k, V.obj(1))


def test_projective_injective():
    t = projective_injective_test(K2.regular())
    assert t.is_projective and t.is_injective
    t = projective_injective_test(K2.simple())
    assert not t.is_projective and not t.is_injective
    t = projective_injective_test(Vect(QQ).obj(2))
    assert t.is_projective and t.is_injective


def test_duals():
    V = Vect(QQ)
    f = V.from_matrix(V.obj(2), V.obj(3), Matrix(QQ, [[1, 2], [3, 4], [5, 6]]))
    assert dualize(V.obj(3)).dim == 3
    assert dualize(f).matrix == f.matrix.T
    assert K2.jordan_blocks(dualize(K2.simple())) == (1,)
    assert K2.jordan_blocks(dualize(K2.regular())) == (2,)
    assert double_dual_iso(K2.regular()).matrix == Matrix.identity(GF(3), 2)


def test_nilmod_validation():
    with pytest.raises(ValueError):
        NilMod(QQ, 1)
    with pytest.raises((NotNilpotent, ValidationError)):
        K2.obj(Matrix.identity(GF(3), 1))
    with pytest.raises((NotNilpotent, ValidationError)):
        # nilpotent but of index 3 > n
        K2.obj(Matrix(GF(3), [[0, 0, 0], [1, 0, 0], [0, 1, 0]]))
    R, k = K2.regular(), K2.simple()
    with pytest.raises(IntertwinerViolation):
        K2.from_matrix(R, R, Matrix(GF(3), [[1, 0], [0, 0]]))
    assert K2.from_matrix(k, R, Matrix(GF(3), [[0], [1]])) is not None


def test_biproduct_identities():
    objs = [K2.simple(), K2.regular()]
    s, inj, proj = biproduct(objs)
    for i in range(2):
        for j in range(2):
            comp = K2.compose(proj[i], inj[j])
            want = K2.identity(objs[i]) if i == j else K2.zero_morphism(objs[j], objs[i])
            assert comp.matrix == want.matrix


def test_coordinates_roundtrip(rng):
    R = K2.regular()
    basis = hom_basis(R, R)
    f = random_morphism(R, R, rng)
    c = coordinates(f, basis)
    total = sum((b.matrix * c[i, 0] for i, b in enumerate(basis)), Matrix.zeros(GF(3), 2, 2))
    assert total == f.matrix


nil_cats = st.sampled_from([NilMod(GF(2), 2), NilMod(GF(3), 2), NilMod(GF(3), 3), NilMod(QQ, 2)])


@given(nil_cats, seeds)
def test_dual_hom_symmetry(cat, seed):
    rng = np.random.default_rng(seed)
    a = random_nilmod_object(cat, rng)
    b = random_nilmod_object(cat, rng)
    assert hom_dimension(a, dualize(b)) == hom_dimension(b, dualize(a))


@given(nil_cats, seeds)
def test_duality_creates_exactness(cat, seed):
    rng = np.random.default_rng(seed)
    a, b = random_nilmod_object(cat, rng), random_nilmod_object(cat, rng)
    f = random_morphism(a, b, rng)
    assert is_monic(f) == is_epi(dualize(f))
    assert is_epi(f) == is_monic(dualize(f))


@given(nil_cats, seeds)
def test_self_injective(cat, seed):
    x = random_nilmod_object(cat, np.random.default_rng(seed), max_blocks=3)
    assert cat.is_projective(x) == cat.is_injective(x)
    assert cat.is_projective(x) == all(s == cat.n for s in cat.jordan_blocks(x))


@given(nil_cats, seeds)
def test_kernel_cokernel_accounting(cat, seed):
    rng = np.random.default_rng(seed)
    a, b = random_nilmod_object(cat, rng), random_nilmod_object(cat, rng)
    f = random_morphism(a, b, rng)
    kc = kernel_cokernel(f)
    r = f.matrix.rank()
    assert kc.kernel.dim + r == a.dim
    assert kc.cokernel.dim + r == b.dim
    assert is_monic(f) == (kc.kernel.dim == 0)
    assert is_epi(f) == (kc.cokernel.dim == 0)
    assert (cat.compose(f, kc.inclusion)).matrix.is_zero()
    assert (cat.compose(kc.projection, f)).matrix.is_zero()
    assert is_iso(cat.identity(a))

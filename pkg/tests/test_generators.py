import numpy as np
from hypothesis import given, settings

from conftest import seeds
from repkit.abcat import NilMod, Vect
from repkit.catalog import example_quiver
from repkit.generators import break_monic, path_counts, random_nilmod_object, random_phi_rep, random_quiver
from repkit.linalg import GF
from repkit.phipsi import in_phi, phi_report
from repkit.rep import validate

K2 = NilMod(GF(3), 2)


@settings(max_examples=30)
@given(seeds)
def test_random_phi_rep_in_phi(seed):
    rng = np.random.default_rng(seed)
    q = random_quiver(rng)
    assert q.is_acyclic and len(q.vertices) <= 8 and len(q.arrows) <= 12
    F = random_phi_rep(q, Vect(GF(5)), rng, max_dim=4)
    assert validate(F) == []
    assert max(F.dims(), default=0) <= 4
    assert in_phi(F).holds


@settings(max_examples=20)
@given(seeds)
def test_prescribed_cokernels(seed):
    rng = np.random.default_rng(seed)
    want = {v: random_nilmod_object(K2, np.random.default_rng([seed, i])) for i, v in enumerate(example_quiver().vertices)}
    F = random_phi_rep(example_quiver(), K2, rng, cokernel=lambda v, r: want[v])
    rep = phi_report(F)
    assert rep.all_monic
    for v in F.quiver.vertices:
        assert K2.jordan_blocks(rep[v].cokernel) == K2.jordan_blocks(want[v])


def test_break_monic():
    rng = np.random.default_rng(3)
    F = random_phi_rep(example_quiver(), K2, rng, cokernel=lambda v, r: K2.regular())
    G = break_monic(F, rng)
    assert not in_phi(G).holds and G.dims() == F.dims()
    assert break_monic(F.category.zero_object(), rng) is None


def test_path_counts():
    c = path_counts(example_quiver())
    assert c[("1", "5")] == 2 and c[("3", "3")] == 1 and c[("5", "1")] == 0


def test_determinism():
    a = random_phi_rep(example_quiver(), K2, np.random.default_rng([1, 2]))
    b = random_phi_rep(example_quiver(), K2, np.random.default_rng([1, 2]))
    assert a == b

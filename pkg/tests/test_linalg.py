from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import fields, matrices, seeds
from repkit.catalog import all_k_representation
from repkit.errors import FieldMismatch, NotNilpotent
from repkit.linalg import GF, QQ, Matrix, cokernel_data, hstack, jordan_matrix, nilpotent_jordan, rank_and_kernel, solve_linear
from repkit.phipsi import phi_map


def M(field, rows):
    return Matrix(field, rows)


def test_rank_kernel_diagonal():
    r, k = rank_and_kernel(M(QQ, [[1, 0], [0, 0]]))
    assert r == 1
    assert k == M(QQ, [[0], [1]])


def test_rank_kernel_char2():
    r, k = rank_and_kernel(M(GF(2), [[1, 1]]))
    assert r == 1
    assert k == M(GF(2), [[1], [1]])


def test_rank_kernel_phi4_all_k():
    # φ_4 stacks the two 7x3 arrow blocks out of vertex 3 side by side
    phi = phi_map(all_k_representation(), "4").matrix
    assert phi.shape == (7, 6)
    r, k = rank_and_kernel(phi)
    assert (r, k.cols) == (6, 0)
    block = Matrix(QQ, phi.array[:, :3].tolist())
    assert rank_and_kernel(block.T)[0] == 3


def test_rationals_are_exact():
    m = M(QQ, [[Fraction(1, 3), Fraction(2, 3)], [1, 2]])
    r, k = rank_and_kernel(m)
    assert r == 1
    assert m @ k == Matrix.zeros(QQ, 2, 1)
    assert k == M(QQ, [[-2], [1]])


def test_solve_identity():
    b = M(QQ, [[3], [Fraction(-1, 2)]])
    res = solve_linear(Matrix.identity(QQ, 2), b)
    assert res.solution == b and res.dimension == 0


def test_solve_free_variables_zero():
    res = solve_linear(M(QQ, [[1, 1]]), M(QQ, [[2]]))
    assert res.solution == M(QQ, [[2], [0]])
    assert res.dimension == 1


def test_solve_inconsistent():
    res = solve_linear(Matrix.zeros(QQ, 1, 1), M(QQ, [[1]]))
    assert res.solution is None and not res.solvable


def test_cokernel_examples():
    proj, d = cokernel_data(Matrix.zeros(QQ, 1, 1))
    assert (proj, d) == (Matrix.identity(QQ, 1), 1)
    proj, d = cokernel_data(Matrix.identity(QQ, 3))
    assert d == 0 and proj.shape == (0, 3)
    inc = M(QQ, [[1, 0], [0, 1], [0, 0]])
    proj, d = cokernel_data(inc)
    assert d == 1 and proj == M(QQ, [[0, 0, 1]])


def test_jordan_examples(rng):
    assert nilpotent_jordan(M(QQ, [[0, 1], [0, 0]])).blocks == (2,)
    assert nilpotent_jordan(Matrix.zeros(QQ, 3, 3)).blocks == (1, 1, 1)
    j = jordan_matrix(QQ, [2, 1, 1])
    p = Matrix.random_invertible(QQ, 4, rng)
    assert nilpotent_jordan(p @ j @ p.inverse()).blocks == (2, 1, 1)


def test_jordan_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        nilpotent_jordan(Matrix.identity(QQ, 2))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Matrix.identity(QQ, 2) + Matrix.identity(GF(3), 2)


def test_gf_arithmetic_reduces():
    m = M(GF(5), [[3, 4]]) + M(GF(5), [[4, 4]])
    assert m == M(GF(5), [[2, 3]])
    assert M(GF(5), [[2]]).inverse() == M(GF(5), [[3]])


@given(matrices())
def test_rank_nullity(m):
    r, k = rank_and_kernel(m)
    assert r + k.cols == m.cols
    assert (m @ k).is_zero()
    assert k.rank() == k.cols
    proj, d = cokernel_data(m)
    assert r + d == m.rows
    assert (proj @ m).is_zero()
    assert proj.rank() == d


@given(matrices(), seeds)
def test_solve_matches_rank_criterion(a, seed):
    rng = np.random.default_rng(seed)
    b = Matrix.random(a.field, a.rows, 1, rng)
    res = solve_linear(a, b)
    solvable = hstack(a, b, rows=a.rows).rank() == a.rank()
    assert res.solvable == solvable
    if solvable:
        assert a @ res.solution == b
    assert res.dimension == a.cols - a.rank()


def test_solve_brute_force_gf2():
    # every 2x2 system over F2 against exhaustive search
    f = GF(2)
    for entries in product(range(2), repeat=6):
        a = Matrix.from_entries(f, 2, 2, entries[:4])
        b = Matrix.from_entries(f, 2, 1, entries[4:])
        sols = [x for x in product(range(2), repeat=2) if a @ Matrix.from_entries(f, 2, 1, x) == b]
        assert solve_linear(a, b).solvable == bool(sols)


@given(fields, st.lists(st.integers(1, 4), min_size=0, max_size=4), seeds)
def test_jordan_recovers_blocks(f, blocks, seed):
    blocks = sorted(blocks, reverse=True)
    n = sum(blocks)
    rng = np.random.default_rng(seed)
    j = jordan_matrix(f, blocks)
    p = Matrix.random_invertible(f, n, rng)
    N = p @ j @ p.inverse()
    data = nilpotent_jordan(N)
    assert data.blocks == tuple(blocks)
    # rank-of-powers oracle
    ranks = [N.power(s).rank() for s in range(n + 2)]
    for s in range(1, n + 1):
        assert sum(1 for b in blocks if b >= s) == ranks[s - 1] - ranks[s]
    B = data.basis
    assert B.inverse() @ N @ B == jordan_matrix(f, data.blocks)

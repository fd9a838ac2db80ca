# %% [markdown]
# # Exact linear algebra
#
# Everything in repkit sits on exact matrices: Fractions over QQ, residues
# over GF(p). No tolerances anywhere, so "rank 3" means rank 3.

# %%
from fractions import Fraction

import numpy as np

from repkit.linalg import GF, QQ, Matrix, cokernel_data, jordan_matrix, nilpotent_jordan, rank_and_kernel, solve_linear

m = Matrix(QQ, [[1, 2, 3], [2, 4, 6], [Fraction(1, 2), 0, 1]])
rank, ker = rank_and_kernel(m)
print("rank", rank)
print("kernel basis\n", ker)
print("m @ ker is zero:", (m @ ker).is_zero())

# %%
# Solving keeps free variables at zero, so answers are reproducible.
res = solve_linear(Matrix(QQ, [[1, 1]]), Matrix(QQ, [[2]]))
print("solution", res.solution.entries(), "solution-space dim", res.dimension)
print("inconsistent:", solve_linear(Matrix.zeros(QQ, 1, 1), Matrix(QQ, [[1]])).solution)

# %%
# Cokernels come back as a projection matrix with full row rank.
proj, d = cokernel_data(Matrix(QQ, [[1, 0], [0, 1], [0, 0]]))
print("coker dim", d, "projection", proj.entries())

# %%
# Same code, different field. Over GF(2) the row [1, 1] kills (1, 1).
print(rank_and_kernel(Matrix(GF(2), [[1, 1]])))

# %%
# Jordan types of nilpotent operators survive any change of basis.
rng = np.random.default_rng(0)
J = jordan_matrix(GF(5), [3, 2, 2, 1])
P = Matrix.random_invertible(GF(5), 8, rng)
N = P @ J @ P.inverse()
data = nilpotent_jordan(N)
print("blocks", data.blocks)
print("chain basis conjugates back:", data.basis.inverse() @ N @ data.basis == J)

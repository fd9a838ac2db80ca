# %% [markdown]
# # Evaluation and its two adjoints
#
# `eval_e(v, F)` reads off F(v). Its left adjoint `free_f(v, X)` puts a copy
# of X on every path out of v; the right adjoint `cofree_g(v, X)` puts one on
# every path into v.

# %%
from repkit.abcat import NilMod, Vect
from repkit.adjoint import adjunction_audit, cofree_g, eval_e, free_f
from repkit.catalog import all_k_representation, example_quiver
from repkit.linalg import GF, QQ

q = example_quiver()
V = Vect(QQ)
k = V.obj(1)
print("f_1(k) dims", free_f("1", k, q).dims())
print("f_4(k) dims", free_f("4", k, q).dims())
print("g_5(k) dims", cofree_g("5", k, q).dims())

# %%
# Hom(f_v X, F) and Hom(X, F(v)) have the same dimension, and the unit and
# counit satisfy both triangle identities. The audit checks all of it.
F = all_k_representation()
print("F(3) has dim", eval_e("3", F).dim)
for v in q.vertices:
    print(v, adjunction_audit(v, k, F).to_dict())

# %%
# Same story over k[x]/(x^2).
K = NilMod(GF(3), 2)
R = K.regular()
print(adjunction_audit("3", R, free_f("1", R, q)).ok)

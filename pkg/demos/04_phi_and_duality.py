# %% [markdown]
# # The classes Φ and Ψ, and transpose duality
#
# F is in Φ(C) when every φ_v = [F(a) for a: w -> v] is monic with cokernel
# in C. Ψ is the mirror image with ψ_v epi and kernels in C.

# %%
from repkit.abcat import NilMod, Vect
from repkit.adjoint import free_f
from repkit.catalog import all_k_representation, example_quiver
from repkit.linalg import GF, QQ
from repkit.phipsi import duality_bridge, in_phi, in_psi, phi_report
from repkit.rep import Representation, rep_dualize

F = all_k_representation()
for e in phi_report(F).vertices:
    print(e.vertex, "monic" if e.monic else "NOT monic", "coker dim", e.cokernel.dim)

# %%
V = Vect(QQ)
bad = Representation(example_quiver(), V, {"1": V.obj(1)}, {})
print(in_phi(bad).to_dict())

# %%
# Over k[x]/(x^2) the class matters: f_3(k) has cokernel k at vertex 3,
# which is Gorenstein projective but not projective.
K = NilMod(GF(3), 2)
G = free_f("3", K.simple(), example_quiver())
for cls in ("all", "proj", "gproj"):
    print(cls, in_phi(G, cls).holds)

# %%
# Transposing a representation reverses the quiver and swaps φ with ψ,
# entry for entry.
D = rep_dualize(F)
print("dual lives on", [(a.src, a.tgt) for a in D.quiver.arrows])
print("dual in Ψ(all):", in_psi(D).holds)
print(duality_bridge(F).to_dict())

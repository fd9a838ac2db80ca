# %% [markdown]
# # Quivers, V-sequences and paths

# %%
from repkit.catalog import loop_quiver, example_quiver, zigzag_quiver
from repkit.quiver import classify_quiver, enumerate_paths, opposite

q = example_quiver()
for a in q.arrows:
    print(a.id, a.src, "->", a.tgt)

# %%
# V_0 is empty, V_1 the sources, and V_{k+1} adds every vertex whose
# in-arrows all start in V_k. A finite quiver is left-rooted exactly when
# this reaches every vertex.
rep = classify_quiver(q)
for k, s in enumerate(rep.v_sequence):
    print(f"V_{k} =", set(s) or "{}")
print("left rooted:", rep.left_rooted)

# %%
print("reversed quiver starts at", classify_quiver(opposite(q)).v_sequence[1])
print("zig-zag:", classify_quiver(zigzag_quiver(5)).to_dict())

# %%
# A loop breaks everything: infinitely many paths, no V-sequence closure.
print(classify_quiver(loop_quiver()).to_dict())

# %%
for p in enumerate_paths(q, "1", "5"):
    print(" -> ".join(p))

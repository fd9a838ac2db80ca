# %% [markdown]
# # Seeded agreement audits
#
# Each audit draws random instances and compares two independent deciders.
# Reports are JSON lines and identical for identical seeds.

# %%
from repkit.audit import THEOREMS, theorem_audit

for name, (_, instance) in THEOREMS.items():
    r = theorem_audit(name, samples=6, seed=1)
    print(f"{name:10s} {instance}\n           {r.summary()}")

# %%
r = theorem_audit("3.4", samples=4, seed=1)
print(r.to_jsonl())

# %% [markdown]
# # Filtrations with checkable certificates
#
# A representation in Φ(C) on a left-rooted quiver has a finite chain
# 0 = F_0 ⊆ F_1 ⊆ ... ⊆ F_n = F whose layers are sums of f_v(X) with X in C.
# `filtrate` builds it; `verify_certificate` rechecks every claim from scratch.

# %%
import dataclasses
import json

from repkit import serialize as ser
from repkit.catalog import all_k_representation
from repkit.filtration import filtrate, verify_certificate
from repkit.rep import RepMorphism

F = all_k_representation()
print("F dims", F.dims())
cert = filtrate(F)
for inc, step in zip(cert.chain, cert.steps):
    print("F_i dims", inc.domain.dims(), "layer", [f"f_{v}(dim {X.dim})" for v, X in step.summands])
print(verify_certificate(F, cert).to_dict())

# %%
# Certificates are plain JSON and verify again after the round trip.
doc = ser.certificate_to_json(cert)
print(len(json.dumps(doc)), "bytes")
print(verify_certificate(F, ser.certificate_from_json(doc)).ok)

# %%
# Tamper with one iso matrix and the verifier names the step.
step = cert.steps[1]
comps = dict(step.iso.components)
c = comps["4"]
comps["4"] = c.category.from_matrix(c.domain, c.codomain, c.matrix * 2)
broken = dataclasses.replace(step, iso=RepMorphism(step.iso.domain, step.iso.codomain, comps))
bad = dataclasses.replace(cert, steps=(cert.steps[0], broken, cert.steps[2]))
print(verify_certificate(F, bad).to_dict())

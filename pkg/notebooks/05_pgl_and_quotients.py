# %% [markdown]
# # PGL(2, q) acting on the projective line
#
# Elements are classified by fixed points on P^1(F_q): two (split), none
# (non-split), one (unipotent).  The characteristic polynomial gives the same
# answer and `classify` insists that both do.

# %%
from collections import Counter

from ffcovers.ffield import field_of_size
from ffcovers.pgl import (
    PGLElement,
    affine_subgroup,
    classify,
    enumerate_pgl,
    orbits_on_p1,
    psl_order,
    subgroup_closure,
    triangle_is_hyperbolic,
)

for q in (3, 4, 5):
    ctx = field_of_size(q)
    G = enumerate_pgl(ctx)
    print(q, len(G), psl_order(q), Counter(classify(A).value for A in G))

# %% [markdown]
# The stabilizer of infinity is z -> a z + b.  It has two orbits, {inf} and
# the affine line.

# %%
F5 = field_of_size(5)
print([len(o) for o in orbits_on_p1(affine_subgroup(F5))])
print(len(subgroup_closure([PGLElement(F5, 1, 1, 0, 1), PGLElement(F5, 0, 1, 1, 0)])))
print(triangle_is_hyperbolic(2, 3, 7), triangle_is_hyperbolic(2, 3, 6))

# %% [markdown]
# ## Automorphisms of y^m = 1 - x^(q-1)
#
# Diagonal maps scale monomials, so invariance is a statement about exponents.
# The report bundles invariants, fixed points and orbit data.

# %%
import json

from ffcovers.quotients import curve_invariance_report

print(json.dumps(curve_invariance_report(2, 3), indent=1, default=str))

# %% [markdown]
# # Finite fields and projective space
#
# Elements of F_{p^n} are integers in base p: the code sum c_i p^i stands for
# the polynomial sum c_i t^i modulo a fixed irreducible.  Enumeration follows
# the code, so the prime subfield comes first.

# %%
from ffcovers import make_field
from ffcovers.ffield import embed, frobenius, nth_power_root_count

F9 = make_field(3, 2)
print(F9, "modulus (constant term first):", F9.modulus)
print([a.serialize() for a in F9])

# %% [markdown]
# Frobenius a -> a^p has order n; squaring the generator of F_4 swaps the two
# roots of t^2 + t + 1.

# %%
F4 = make_field(2, 2)
t = F4.gen()
print("frob(t) =", frobenius(t), " t^2 =", t * t)

# %% [markdown]
# F_4 sits inside F_16.  The embedding sends t to the first root of t^2+t+1
# met while enumerating F_16, so it is reproducible.

# %%
F16 = make_field(2, 4)
print("t ->", embed(t, F16).serialize())

# %% [markdown]
# The number of n-th roots of a nonzero c is gcd(n, q - 1) or 0.  Summed over
# all c the counts give back q.

# %%
F7 = make_field(7)
counts = {c.code: nth_power_root_count(c, 3) for c in F7}
print(counts, sum(counts.values()))

# %% [markdown]
# ## Points and lines of the plane
#
# P^2(F_p) has p^2 + p + 1 points.  Lines are dual points, and every line
# carries p + 1 points.

# %%
from ffcovers.projective import enumerate_proj, lines_in_plane, points_on_line

for p in (2, 3, 5, 7):
    F = make_field(p)
    pts = enumerate_proj(F, 2)
    sizes = {len(points_on_line(ln, pts)) for ln in lines_in_plane(F)}
    print(p, len(pts), p * p + p + 1, sizes)

# %% [markdown]
# # Kummer covers of the line
#
# Curves y^n = c prod (x - r_i)^{d_i}.  Ramification above r_i is
# n / gcd(n, d_i); infinity behaves like a branch point with multiplicity
# -sum d_i.

# %%
from ffcovers import make_field
from ffcovers.covers import (
    check_bounds,
    count_affine_points,
    count_smooth_model_points,
    genus_paper,
    genus_tame,
    parse_curve,
    ramification_indices,
)

F5 = make_field(5)
E = parse_curve(F5, "y^2 = x (x-1) (x+1)")
print(ramification_indices(E))

# %% [markdown]
# Two genus formulas.  (n - 1)(s - 2)/2 is only right when infinity is
# unramified, and gives 1/2 for this cubic.  Riemann-Hurwitz with the point at
# infinity included gives the true genus 1.

# %%
print(genus_paper(E), genus_tame(E))

# %% [markdown]
# Points: the affine count uses the number of n-th roots of f(x) per x, then
# the smooth model adds the points over infinity.

# %%
for r in (1, 2, 3):
    print(r, count_affine_points(E, r), count_smooth_model_points(E, r))

# %% [markdown]
# ## Hermitian and Fermat curves
#
# x^{q0+1} + y^{q0+1} + z^{q0+1} = 0 over F_{q0^2} has q0^3 + 1 points, the
# most any curve of its genus can have there.

# %%
from ffcovers.covers import count_plane_points, fermat_curve, hermitian_curve
from ffcovers.ffield import field_of_size

for q0 in (2, 3):
    ctx = field_of_size(q0 * q0)
    N = count_plane_points(hermitian_curve(ctx, q0))
    kummer, _ = fermat_curve(ctx, q0 + 1, q0 + 1)
    g = genus_tame(kummer)
    print(q0, N, g, check_bounds(N, g, q0 * q0, plane_degree=q0 + 1).to_dict())

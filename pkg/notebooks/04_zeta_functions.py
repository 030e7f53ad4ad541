# %% [markdown]
# # Zeta functions from point counts
#
# P(t) has degree 2g and satisfies b_{2g-i} = q^{g-i} b_i, so the counts
# N_1..N_g determine it.  Everything after that is a prediction.

# %%
from ffcovers import make_field
from ffcovers.covers import count_affine_points_bruteforce, parse_curve
from ffcovers.zeta import fit_numerator, predicted_counts, series_consistency, weil_magnitude_check

F5 = make_field(5)
E = parse_curve(F5, "y^2 = x (x-1) (x+1)")
counts = [count_affine_points_bruteforce(E, r) + 1 for r in (1, 2, 3)]
zn = fit_numerator(5, 1, counts[:1])
print(counts, zn.coeffs, predicted_counts(zn, 3))

# %% [markdown]
# The exponential series exp(sum N_r t^r / r) must match P(t)/((1-t)(1-qt))
# term by term, in exact rationals.

# %%
print(series_consistency(zn, counts, 3))
print(series_consistency(zn, [counts[0], counts[1] + 1, counts[2]], 3))

# %% [markdown]
# Inverse roots have absolute value sqrt(q).  The Hermitian curve over F_9 is
# an extreme case: P(t) = (1 + 3t)^6, one root repeated six times.

# %%
from ffcovers.covers import count_smooth_model_points, fermat_curve

F9 = make_field(3, 2)
H, _ = fermat_curve(F9, 4, 4)
hz = fit_numerator(9, 3, [count_smooth_model_points(H, r) for r in (1, 2, 3)])
print(hz.coeffs, weil_magnitude_check(hz))

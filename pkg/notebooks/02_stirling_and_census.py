# %% [markdown]
# # Stirling numbers and the census of covers
#
# The falling factorial (q)_n = q (q-1) ... (q-n+1) expands in powers of q
# with the signed Stirling numbers of the first kind as coefficients.

# %%
from ffcovers.combinatorics import check_stirling_identity, falling_factorial, stirling_table

for row in stirling_table(5):
    print(row)
print(all(check_stirling_identity(q, n) for q in range(2, 10) for n in range(11)))
print(falling_factorial(5, 3))

# %% [markdown]
# ## Counting covers y^d = f(x) up to x -> a x + b
#
# A closed-form guess sums (q)_k over root counts and divides by the order of
# the affine group.  The oracle instead partitions monic polynomials of degree
# n into orbits and counts them, and Burnside's lemma checks that count.  The
# two numbers are kept side by side; they do not agree in general.

# %%
from ffcovers.combinatorics import census_covers_oracle
from ffcovers.ffield import field_of_size

for q in (2, 3, 4, 5):
    for n in (1, 2, 3):
        r = census_covers_oracle(field_of_size(q), 2, n)
        print(f"q={q} n={n}  orbits={r.oracle_value}  burnside={r.burnside_value}  formula={r.formula_value}")

# %% [markdown]
# The root-count table behind the formula: how many monic polynomials have
# exactly k distinct roots in F_q.

# %%
r = census_covers_oracle(field_of_size(5), 2, 3)
for k, (ff, count) in sorted(r.by_root_count.items()):
    print(k, ff, count)

# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Alexander polynomials of K_n and their cyclotomic factors
#
# K_n has Alexander polynomial ((t^n + 1)/(t + 1))^2.  For n = pq this splits
# into squares of three cyclotomic polynomials, and the values at -1 give the
# orders of the first homology of the branched covers.

# %%
from dsplit.alexpoly import (
    cyclotomic,
    cyclotomic_split,
    homology_order,
    pretzel_alexander,
    torus2_alexander,
)

# %%
for n in (3, 5, 15):
    print(f"T(2,{n}):", torus2_alexander(n))

# %% [markdown]
# ## The n = 15 factorization

# %%
phi6, phi10, phi30 = cyclotomic_split(3, 5)
for name, f in [("phi_6", phi6), ("phi_10", phi10), ("phi_30", phi30)]:
    print(f"{name:7s} {str(f):45s} value at -1: {f(-1)}")

assert phi6 * phi10 * phi30 == torus2_alexander(15)

# %%
delta15 = pretzel_alexander(15)
print("Delta_K15 =", delta15)
print("|H_1(M(K_15))| =", homology_order(delta15))

# %% [markdown]
# ## Determinants along the odd n
#
# |Delta_{K_n}(-1)| = n^2 for every odd n.

# %%
print([(n, homology_order(pretzel_alexander(n))) for n in range(1, 32, 2)])

# %% [markdown]
# Cyclotomic polynomials come from repeated exact division of t^n - 1, so
# the coefficients stay integral throughout.

# %%
for k in (1, 2, 6, 10, 30, 105):
    print(k, cyclotomic(k))

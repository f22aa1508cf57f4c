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
# # d-invariants of M(K_15)
#
# For each Spin^c label m with |m| <= 112:
#
#     d(M, m) = 2 * delta_m - ((2m - 225)^2 - 225) / 900
#
# with delta_m the minimum of psi over the tensor levels.

# %%
from dsplit.dinv import d_table, delta, grid_labels, lens_term
from dsplit.staircase import paper_tensor

levels = paper_tensor()

# %%
for m in (0, 45, 75, -75, -105):
    dl = delta(levels, m)
    print(f"m={m:5d}  delta={dl:3d}  lens={str(lens_term(225, m)):>4s}  d={2 * dl - lens_term(225, m)}")

# %% [markdown]
# ## The full table
#
# Most labels give non-integral rationals.  The multiples of 15 form the
# order-15 subgroup, where the values are even integers.

# %%
table = d_table(levels, 225)
integral = {m: int(table[m]) for m in table.labels() if table[m].denominator == 1}
print(integral)
print("conjugation symmetric:", table.is_conjugation_symmetric())

# %% [markdown]
# ## Grid layout: d(ipa + jqb) with a = 25, b = 9

# %%
labels = grid_labels(3, 5)
for j, row in enumerate(labels):
    print(f"j={j}", [table.integer(m) for m in row])

# %% [markdown]
# The table also serializes to CSV and JSON.

# %%
print(table.to_csv()[:120])

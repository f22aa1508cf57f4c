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
# # Splitting and slice obstructions for K_15
#
# If M were rational homology cobordant to M_1 # M_2 with the 3- and
# 5-torsion separated, d(ipa + jqb) - d(ipa) - d(jqb) would not depend on
# (i, j).

# %%
from dsplit.dinv import d_table
from dsplit.obstruct import linking_form, metabolizer_obstruction, split_obstruction
from dsplit.staircase import paper_tensor

table = d_table(paper_tensor(), 225)

# %%
grid = split_obstruction(table, 3, 5)
print(grid.to_markdown())
print("obstructed:", grid.obstructed)

# %% [markdown]
# Flipping the global sign of d negates every second difference, so the
# verdict does not depend on the orientation convention.

# %%
print(split_obstruction(table.negated(), 3, 5).obstructed)

# %% [markdown]
# ## Metabolizer test
#
# Z_225 has a single subgroup of order 15.  The linking form vanishes on it,
# but d(0) = 22, so M bounds no rational homology ball.

# %%
for c in metabolizer_obstruction(table):
    print(c)
print(linking_form(15, 15, 225), linking_form(1, 1, 225))

# %% [markdown]
# ## A larger member of the family
#
# The same pipeline runs for n = 35 = 5 * 7 with the extrapolated staircase.
# This instance is not checked against any published data.

# %%
from dsplit.staircase import family_staircase

big = d_table(family_staircase(35), 35**2)
print(split_obstruction(big, 5, 7).to_markdown())

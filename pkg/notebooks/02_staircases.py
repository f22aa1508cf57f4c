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
# # Staircase generators and their tensor product
#
# M(K_15) is 225-surgery on L = T(14, 15) # 11 Wh(T(2, 3)).  The knot complex
# of each summand contributes a staircase of grading-0 generators, and the
# levels of the tensor product are all pairwise sums.

# %%
from dsplit.staircase import (
    consecutive_torus_staircase,
    pareto_min,
    paper_tensor,
    tensor_pairs,
    torus_14_15,
    unit_staircase,
    whitehead_sum_22,
)

# %%
c1, c2 = torus_14_15(), whitehead_sum_22()
print(len(c1), "generators:", c1.to_pairs())
print(len(c2), "generators:", c2.to_pairs())

# %% [markdown]
# The T(14, 15) corners are pairs of triangular numbers, which is what the
# extrapolated builder uses for larger n.

# %%
assert consecutive_torus_staircase(15) == c1
assert unit_staircase(22) == c2
print(consecutive_torus_staircase(19).to_pairs())

# %% [markdown]
# ## Tensor product

# %%
n_pairs = sum(1 for _ in tensor_pairs(c1, c2))
levels = paper_tensor()
print(f"{n_pairs} pairs, {len(levels)} distinct levels")

# %% [markdown]
# Only the Pareto-minimal levels can attain the minimum used by the
# d-invariant formula.

# %%
frontier = sorted(pareto_min(levels))
print(len(frontier), "minimal levels")
print(frontier[:10], "...")

# %% [markdown]
# # Where zero-divisor cup-length stops: s = 2
#
# For the Klein bottle the dimensional bound gives TC <= 4, but no product
# of four zero divisors survives.  An exhaustive search over every nonzero
# degree-1 zero divisor (and over the whole kernel) tops out at 3.

# %%
from tcsum import tc_bounds, zcl_search
from tcsum.zcl import family_product

pr = family_product(2, 2, 2)
print(zcl_search(pr, pool="std1", strategy="exhaustive").render())

# %%
full = zcl_search(pr, pool="kernel", strategy="exhaustive")
print("full kernel pool:", full.zcl_lower, full.search)

# %%
for params in [(2, 2, 2), (2, 3, 2), (1, 2, 3), (2, 2, 3)]:
    print(params, tc_bounds(*params))

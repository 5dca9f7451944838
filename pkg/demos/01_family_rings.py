# %% [markdown]
# # Cohomology of g # RP^m
#
# The ring is spanned by 1, the powers x_u^k (k < m) of each generator, and
# one top class t.  Different generators annihilate each other and every
# x_u^m equals t.

# %%
from tcsum import connected_sum, iterated_sum, ring_new
from tcsum.algebra import format_poincare

r = ring_new(3, 4)
print(r.labels)
print("Poincare polynomial:", format_poincare(r.poincare()))

# %%
x1, x2, t = r.element("x1"), r.element("x2"), r.element("t")
print("x1 * x2      =", x1 * x2)
print("x1^4         =", x1 ** 4)
print("x2^4         =", x2 ** 4)
print("(x1 + x2)^2  =", (x1 + x2) ** 2)
print("(x1 + x2)^4  =", (x1 + x2) ** 4, " (x1^4 + x2^4 = 2t = 0)")

# %% [markdown]
# The same ring comes out of the generic connected-sum construction,
# starting from the truncated polynomial ring of RP^4.

# %%
rp4 = ring_new(1, 4)
assert iterated_sum(rp4, 3) == r
klein = connected_sum(ring_new(1, 2), ring_new(1, 2))
print("RP^2 # RP^2:", klein.labels, klein.poincare())

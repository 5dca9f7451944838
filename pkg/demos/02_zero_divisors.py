# %% [markdown]
# # Zero divisors in H*(X^s)
#
# A zero divisor is a class killed by the iterated cup product
# H*(X)^{(x)s} -> H*(X).  Here X is the Klein bottle and s = 3.

# %%
from tcsum import cup_map, is_zero_divisor, kernel_basis, power, ring_new

pr = power(ring_new(2, 2), 3)
print("graded dimensions of the product:", pr.poincare())

# %%
for d in range(pr.top_degree + 1):
    cm = cup_map(pr, d)
    kb = kernel_basis(pr, d, cm)
    print(f"degree {d}: {cm.shape[0]:3d} tuples, rank {cm.rank()}, kernel {kb.dimension}")

# %%
for v in kernel_basis(pr, 1).vectors:
    print(" + ".join(v.labels()))

# %%
x, t = pr.x, pr.t
print(is_zero_divisor(pr, x(1, 1) + x(1, 2)))  # True
print(is_zero_divisor(pr, x(1, 1)))            # False
print(is_zero_divisor(pr, t(1) + t(2)))        # True

# %% [markdown]
# # TC_s(g # RP^m) = s m
#
# The product
#
#     (x11+x12)^m (x11+x13)^m ... (x11+x1s)^m (x21+x22)^(m-1) (x21+x23)
#
# has s m zero-divisor factors and equals the top class t1 t2 ... ts, so
# s m <= zcl_s <= TC_s <= s dim = s m.

# %%
from tcsum import verify_steps_s3, verify_theorem

print(verify_theorem(2, 3, 4).render())

# %% [markdown]
# For s = 3 the product collapses step by step; each rewrite is checked as
# an identity between expanded normal forms.

# %%
for step in verify_steps_s3(2, 4):
    print(f"{step.name:>4}  {step.relation:<32} holds={step.holds}")

# %%
import time

start = time.perf_counter()
rows = [(g, m, s, verify_theorem(g, m, s).conclusion)
        for g in (2, 3, 4) for m in range(2, 7) for s in (3, 4, 5)]
print(f"{len(rows)} certificates, all exact: {all(c == 'exact' for *_, c in rows)}, "
      f"{time.perf_counter() - start:.2f} s")

# %% [markdown]
# # Rings from presentation files
#
# Any finite graded GF(2) algebra can be entered as text and run through
# the same machinery.  Here: the torus and the genus-2 orientable surface.

# %%
from tcsum import connected_sum, power, zcl_search
from tcsum.presentation import format_presentation, load_ring

torus = load_ring("""
# H*(T^2; Z/2)
gen a 1
gen b 1
gen ab 2
mul a b = ab
""")
genus2 = connected_sum(torus, torus)
print(format_presentation(genus2))

# %%
# the full kernel pool grows as 2^(kernel dimension) per degree, so the
# genus-2 surface is searched over degree-1 zero divisors only
for name, ring, pool in [("torus", torus, "kernel"), ("genus 2", genus2, "std1")]:
    cert = zcl_search(power(ring, 2), pool=pool, strategy="exhaustive")
    print(f"{name}: {cert.zcl_lower} <= TC <= {cert.dim_upper}")

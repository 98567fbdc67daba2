# %% [markdown]
# Block intersection polynomials for doubly regular tournaments
#
# For a DRT on v = 4m - 1 vertices and a candidate transitive subtournament
# of size y, the adjacency polynomial C(x, y) must be nonnegative at every
# integer x.  A negative value rules the size out.

# %%
from transub import adjacency_poly, bip_bound, bip_feasible, drt_bound_exact, thm54_bound
from transub.bip import bip_witness

p = adjacency_poly(2, 4)
print(f"3 C(x, 4) = {p.a} x^2 + {p.b} x + {p.c}; C(1, 4) = {p.value(1)}")
print("size 4 feasible on 7 vertices?", bip_feasible(2, 4), "witness x =", bip_witness(2, 4))

# %% [markdown]
# Compare against the Hoffman-type bound.  The polynomial wins whenever
# the closed-form case analysis on floor(sqrt(1 + 12m)) applies.

# %%
print(" m    v  hoffman  thm54  bip")
for m in range(1, 41):
    v = 4 * m - 1
    h = drt_bound_exact(v).integer_bound
    t = thm54_bound(m)
    b = bip_bound(m)
    flag = "  <- improves" if b < h else ""
    print(f"{m:2d} {v:4d} {h:8d} {t.bound:6d} {b:4d}{flag}")

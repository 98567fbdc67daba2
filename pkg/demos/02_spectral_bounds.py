# %% [markdown]
# Spectral upper bounds
#
# For any digraph the interlacing test compares the top Seidel eigenvalues
# against the spectrum of a transitive tournament.  For regular digraphs the
# Hoffman-type bound is usually sharper.

# %%
import math

import numpy as np

from transub import best_bound, drt_bound_exact, paley_tournament, parity_refine, random_tournament
from transub.bounds import interlacing_value

for v in range(7, 36, 4):
    print(v, f"{interlacing_value(math.sqrt(v)):.4f}", drt_bound_exact(v).integer_bound)

# %% [markdown]
# At v = 23 the regular bound is exactly 7 (13 + 12*23 = 17^2).  Equality
# would force an even order in a regular tournament, so the bound drops to 6.

# %%
rep = drt_bound_exact(23)
print(rep, "->", parity_refine(rep, True, 23).integer_bound)

# %% [markdown]
# Every method at once, on a Paley tournament and on a random tournament
# (where only interlacing and possibly the general bound apply).

# %%
for r in best_bound(paley_tournament(27)).reports:
    print(r.method, r.integer_bound, r.notes)

rng = np.random.default_rng(0)
summary = best_bound(random_tournament(14, rng))
for r in summary.reports:
    print(r.method, r.applicable, r.integer_bound)
print("best:", summary.best)

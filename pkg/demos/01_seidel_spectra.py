# %% [markdown]
# Seidel spectra of tournaments
#
# The Seidel matrix S = i(A - A^T) of a digraph is Hermitian, so its
# eigenvalues are real and come in +/- pairs.  Doubly regular tournaments
# have the smallest possible spectrum: {sqrt(v), 0, -sqrt(v)}.

# %%
import math

import numpy as np

from transub import classify, paley_tournament, spectrum, transitive_tournament

g = paley_tournament(11)
print(classify(g))
sp = spectrum(g)
for rec in sp.to_records():
    print(rec)

# %% [markdown]
# Only the eigenvalue 0 carries the all-ones vector (it is the only *main*
# eigenvalue), which is true of every regular digraph.

# %%
print("main eigenvalues:", sp.main_set)

# %% [markdown]
# Deleting a vertex breaks regularity.  The new main eigenvalues are +/-1,
# each with main angle 1/sqrt(2), while +/-sqrt(v) survive as non-main.

# %%
h = g.delete_vertex(0)
sp_h = spectrum(h)
print(np.round(sp_h.eigenvalues, 6), np.round(sp_h.main_angles, 6))
print("sqrt(11) =", math.sqrt(11))

# %% [markdown]
# A transitive tournament on s vertices has eigenvalues cot((2i-1)pi/(2s)).

# %%
s = 6
cot = [1 / math.tan((2 * i - 1) * math.pi / (2 * s)) for i in range(1, s + 1)]
print(np.round(spectrum(transitive_tournament(s)).expanded(), 10))
print(np.round(sorted(cot, reverse=True), 10))

# %% [markdown]
# Exact search and how close the bounds get
#
# Branch and bound grows chains in which each new vertex is dominated by
# everything before it.  Brute force over all subsets serves as a check up
# to about 20 vertices.

# %%
import time

from transub import (balance_check, best_bound, max_transitive_bb, max_transitive_brute,
                     paley_tournament, verify_transitive)

for q in (7, 11, 19, 23, 27, 31, 43):
    g = paley_tournament(q)
    t0 = time.perf_counter()
    res = max_transitive_bb(g)
    dt = time.perf_counter() - t0
    print(f"q={q:3d} max={res.max_size} bound={best_bound(g).best} "
          f"nodes={res.nodes_explored} {dt:.3f}s witness={res.witness}")
    assert verify_transitive(g, res.witness)

# %%
g = paley_tournament(19)
print(max_transitive_brute(g).max_size == max_transitive_bb(g).max_size)

# %% [markdown]
# Vertices outside a maximum witness: how many witness vertices dominate
# them and how many they dominate.  In a regular tournament the two always
# sum to the witness size.

# %%
res = max_transitive_bb(g)
rep = balance_check(g, res.witness)
print(rep.all_balanced, list(rep.counts.items())[:6])

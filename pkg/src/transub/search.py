"""Exact maximum transitive subtournament search.

Witness orderings follow the lower-triangular convention: in a witness
``order``, every later vertex dominates every earlier one, so ``order[0]``
is the sink and ``order[-1]`` the source of the subtournament.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass

import numpy as np

from .digraph import Digraph

BRUTE_MAX_V = 20


@dataclass(frozen=True)
class SearchResult:
    max_size: int
    witness: tuple[int, ...]
    nodes_explored: int
    method: str
    time_limited: bool = False

    def to_dict(self) -> dict:
        d = asdict(self)
        d["witness"] = list(self.witness)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_vertices(g: Digraph, vertices) -> list[int]:
    vs = [int(x) for x in vertices]
    for x in vs:
        if not 0 <= x < g.v:
            raise ValueError(f"vertex {x} out of range for v={g.v}")
    if len(set(vs)) != len(vs):
        raise ValueError("repeated vertex")
    return vs


def verify_transitive(g: Digraph, order) -> bool:
    """True iff order[j] -> order[i] is an edge for every i < j."""
    vs = _check_vertices(g, order)
    sub = g.adj[np.ix_(vs, vs)]
    return bool(np.array_equal(sub, np.tril(np.ones_like(sub), k=-1)))


def is_transitive_set(g: Digraph, vertices) -> bool:
    """Order-free test: a tournament on the set with no directed 3-cycle."""
    vs = _check_vertices(g, vertices)
    sub = g.adj[np.ix_(vs, vs)].astype(np.int64)
    k = len(vs)
    if not np.array_equal(sub + sub.T, np.ones((k, k), dtype=np.int64) - np.eye(k, dtype=np.int64)):
        return False
    for a in range(k):
        for b in range(k):
            if sub[a, b] and (sub[b] & sub[:, a]).any():
                return False
    return True


def transitive_order(g: Digraph, vertices) -> list[int]:
    """Sort a transitive vertex set sink-first (ascending out-degree inside it)."""
    vs = _check_vertices(g, vertices)
    sub = g.adj[np.ix_(vs, vs)]
    return [vs[i] for i in np.argsort(sub.sum(axis=1), kind="stable")]


# -- brute force --------------------------------------------------------------

def max_transitive_brute(g: Digraph) -> SearchResult:
    """Scan every vertex subset at once with numpy.

    A subset with k members is transitive iff it spans k(k-1)/2 edges (so it
    is a tournament) and its internal out-degrees d satisfy
    sum C(d, 2) = C(k, 3), i.e. it has no directed 3-cycle.
    """
    v = g.v
    if v > BRUTE_MAX_V:
        raise ValueError(f"brute force limited to v <= {BRUTE_MAX_V}, got {v}")
    masks = np.arange(1 << v, dtype=np.int64)
    size = np.bitwise_count(masks).astype(np.int64)
    edges = np.zeros_like(masks)
    pairs = np.zeros_like(masks)
    for u, out in enumerate(g.out_bits):
        d = np.bitwise_count(masks & out).astype(np.int64) * ((masks >> u) & 1)
        edges += d
        pairs += d * (d - 1) // 2
    ok = (2 * edges == size * (size - 1)) & (6 * pairs == size * (size - 1) * (size - 2))
    best = int(size[ok].max())
    mask = int(masks[ok][np.argmax(size[ok])])
    members = [i for i in range(v) if mask >> i & 1]
    return SearchResult(best, tuple(transitive_order(g, members)), 1 << v, "brute")


# -- branch and bound ---------------------------------------------------------

class _Stop(Exception):
    pass


def max_transitive_bb(g: Digraph, time_limit: float | None = None,
                      upper: int | None = None, use_bounds: bool = True) -> SearchResult:
    """Depth-first growth of chains c_1 -> c_2 -> ... -> c_r.

    Each new vertex must be dominated by every chain member, so the candidate
    set is the running intersection of out-neighbourhoods.  A transitive set
    has a unique source-to-sink order, so every set is reached exactly once.
    Branches that cannot beat the incumbent are cut, and the search stops
    once the incumbent meets the global upper bound.
    """
    v = g.v
    if v == 0:
        return SearchResult(0, (), 0, "branch_bound")
    if upper is None and use_bounds:
        from .bounds import best_bound
        upper = best_bound(g).best
    upper = v if upper is None else min(upper, v)

    out = g.out_bits
    deg = g.out_degree
    order = sorted(range(v), key=lambda x: (-int(deg[x]), x))
    deadline = None if time_limit is None else time.monotonic() + time_limit

    best: list[int] = [order[0]]
    nodes = 0
    chain: list[int] = []

    def extend(cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if deadline is not None and nodes & 1023 == 0 and time.monotonic() > deadline:
            raise TimeoutError
        if len(chain) > len(best):
            best = chain.copy()
            if len(best) >= upper:
                raise _Stop
        remaining = cand.bit_count()
        for x in order:
            if not cand >> x & 1:
                continue
            if len(chain) + remaining <= len(best):
                return
            chain.append(x)
            extend(cand & out[x])
            chain.pop()

    limited = False
    try:
        extend((1 << v) - 1)
    except _Stop:
        pass
    except TimeoutError:
        limited = True
    return SearchResult(len(best), tuple(reversed(best)), nodes, "branch_bound", limited)


def max_transitive(g: Digraph, time_limit: float | None = None) -> SearchResult:
    """Exact search; brute force is used only where it is cheap."""
    if g.v <= 12:
        return max_transitive_brute(g)
    return max_transitive_bb(g, time_limit=time_limit)


# -- outside-vertex balance ---------------------------------------------------

@dataclass(frozen=True)
class BalanceReport:
    counts: dict  # outside vertex -> (dominating it, dominated by it)
    all_balanced: bool


def balance_check(g: Digraph, witness) -> BalanceReport:
    """For each vertex outside the witness, count members dominating it and dominated by it."""
    if not verify_transitive(g, witness):
        raise ValueError("witness is not a transitive subtournament in the given order")
    members = list(witness)
    inside = set(members)
    counts = {}
    for x in range(g.v):
        if x in inside:
            continue
        dominating = int(g.adj[members, x].sum())
        dominated = int(g.adj[x, members].sum())
        counts[x] = (dominating, dominated)
    return BalanceReport(counts, all(a == b for a, b in counts.values()))

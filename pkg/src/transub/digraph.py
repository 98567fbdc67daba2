"""Dense digraphs without loops or 2-cycles, their classification, and I/O."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .field import build_field, prime_power


class DigraphError(ValueError):
    """Base class for invalid digraph input."""


class NotSquareError(DigraphError):
    pass


class LoopError(DigraphError):
    pass


class TwoCycleError(DigraphError):
    pass


class FormatError(DigraphError):
    """Malformed graph text; carries 1-based line and column."""

    def __init__(self, msg: str, line: int, col: int | None = None):
        where = f"line {line}" if col is None else f"line {line}, column {col}"
        super().__init__(f"{where}: {msg}")
        self.line = line
        self.col = col


class Digraph:
    """Immutable 0/1 adjacency structure on vertices 0..v-1.

    ``adj[x, y]`` is True iff (x, y) is an edge.  Out- and in-neighbourhoods
    are also kept as Python int bitsets for the search code.
    """

    def __init__(self, adj):
        a = np.array(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NotSquareError(f"adjacency matrix must be square, got shape {a.shape}")
        diag = np.flatnonzero(np.diag(a))
        if diag.size:
            x = int(diag[0])
            raise LoopError(f"loop at ({x},{x})")
        both = np.argwhere(np.triu(a & a.T))
        if both.size:
            x, y = map(int, both[0])
            raise TwoCycleError(f"2-cycle at ({x},{y})")
        a.setflags(write=False)
        self.adj = a

    @property
    def v(self) -> int:
        return self.adj.shape[0]

    def __len__(self) -> int:
        return self.v

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash(self.adj.tobytes())

    def __repr__(self) -> str:
        return f"Digraph(v={self.v}, edges={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return int(self.adj.sum())

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.adj[x, y])

    @cached_property
    def out_degree(self) -> np.ndarray:
        return self.adj.sum(axis=1).astype(np.int64)

    @cached_property
    def in_degree(self) -> np.ndarray:
        return self.adj.sum(axis=0).astype(np.int64)

    @cached_property
    def out_bits(self) -> tuple[int, ...]:
        return tuple(_row_bits(row) for row in self.adj)

    @cached_property
    def in_bits(self) -> tuple[int, ...]:
        return tuple(_row_bits(col) for col in self.adj.T)

    def skew(self) -> np.ndarray:
        """K = A - A^T, the real skew-symmetric core of the Seidel matrix."""
        a = self.adj.astype(np.int64)
        return a - a.T

    def induced(self, vertices) -> Digraph:
        idx = list(vertices)
        return Digraph(self.adj[np.ix_(idx, idx)])

    def delete_vertex(self, x: int) -> Digraph:
        return self.induced(i for i in range(self.v) if i != x)

    def reverse(self) -> Digraph:
        return Digraph(self.adj.T)


def _row_bits(row) -> int:
    bits = 0
    for i in np.flatnonzero(row):
        bits |= 1 << int(i)
    return bits


def validate_digraph(adj) -> Digraph:
    return Digraph(adj)


@dataclass(frozen=True)
class DigraphClass:
    is_tournament: bool
    is_regular: bool
    regular_degree: int | None
    is_doubly_regular: bool
    lam: int | None
    m: int | None

    @property
    def is_regular_tournament(self) -> bool:
        return self.is_tournament and self.is_regular


def classify(g: Digraph) -> DigraphClass:
    v = g.v
    a = g.adj.astype(np.int64)
    off_diag = np.ones((v, v), dtype=np.int64) - np.eye(v, dtype=np.int64)
    tournament = bool(np.array_equal(a + a.T, off_diag))
    out, inn = g.out_degree, g.in_degree
    regular = bool((out == out[0]).all() and (inn == out[0]).all())
    k = int(out[0]) if regular else None

    doubly = False
    lam = m = None
    if tournament and regular and v % 4 == 3:
        # common out-neighbours of each pair = off-diagonal of A A^T
        common = a @ a.T
        vals = common[off_diag.astype(bool)]
        if vals.size == 0 or (vals == vals[0]).all():
            doubly = True
            lam = (v - 3) // 4
            m = (v + 1) // 4
    return DigraphClass(tournament, regular, k, doubly, lam, m)


# -- constructions ----------------------------------------------------------

def transitive_tournament(s: int) -> Digraph:
    """Vertex i dominates every j < i (strictly lower-triangular adjacency)."""
    return Digraph(np.tril(np.ones((s, s), dtype=bool), k=-1))


def directed_cycle(n: int) -> Digraph:
    if n < 3:
        raise DigraphError("a directed cycle needs at least 3 vertices")
    a = np.zeros((n, n), dtype=bool)
    a[np.arange(n), (np.arange(n) + 1) % n] = True
    return Digraph(a)


def random_tournament(v: int, rng: np.random.Generator) -> Digraph:
    upper = np.triu(rng.random((v, v)) < 0.5, k=1)
    lower = np.triu(~upper, k=1).T
    return Digraph(upper | lower)


def random_oriented_graph(v: int, rng: np.random.Generator, density: float = 0.7) -> Digraph:
    """Random orientation of a G(v, density) graph; not a tournament in general."""
    present = np.triu(rng.random((v, v)) < density, k=1)
    forward = rng.random((v, v)) < 0.5
    a = present & forward
    b = (present & ~forward).T
    return Digraph(a | b)


def paley_tournament(q) -> Digraph:
    """Paley tournament on GF(q): x -> y iff x - y is a nonzero square.

    ``q`` is either the order itself or a ``(p, deg)`` pair.
    """
    if isinstance(q, tuple):
        p, deg = q
    else:
        pp = prime_power(int(q))
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        p, deg = pp
    order = p ** deg
    if order % 4 != 3:
        raise ValueError(f"Paley tournament needs q = 3 (mod 4), got q = {order}")
    gf = build_field(p, deg)
    squares = np.zeros(order, dtype=bool)
    squares[list(gf.squares())] = True
    neg = np.array([gf.neg(y) for y in range(order)])
    diff = gf.add_table[:, neg]  # diff[x, y] = x - y
    return Digraph(squares[diff])


# -- text and JSON formats --------------------------------------------------

def write_digraph(g: Digraph) -> str:
    rows = ("".join("1" if b else "0" for b in row) for row in g.adj)
    return f"{g.v}\n" + "".join(r + "\n" for r in rows)


def read_digraph(text: str) -> Digraph:
    """Parse the text format: a vertex count line, then v rows of 0/1 chars."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty input", 1)
    header = lines[0].strip()
    if not header.isdigit() or int(header) < 1:
        raise FormatError(f"expected a positive vertex count, got {lines[0]!r}", 1)
    v = int(header)
    if len(lines) - 1 != v:
        raise FormatError(f"expected {v} rows, got {len(lines) - 1}", len(lines))
    adj = np.zeros((v, v), dtype=bool)
    for i, row in enumerate(lines[1:]):
        lineno = i + 2
        if len(row) != v:
            raise FormatError(f"row has {len(row)} characters, expected {v}", lineno)
        for j, ch in enumerate(row):
            if ch not in "01":
                raise FormatError(f"invalid character {ch!r}", lineno, j + 1)
            adj[i, j] = ch == "1"
    return Digraph(adj)


def digraph_to_json(g: Digraph) -> str:
    edges = [[int(x), int(y)] for x, y in np.argwhere(g.adj)]
    return json.dumps({"v": g.v, "edges": edges})


def digraph_from_json(text: str) -> Digraph:
    obj = json.loads(text)
    try:
        v = int(obj["v"])
        edges = obj["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DigraphError(f"JSON digraph needs integer 'v' and list 'edges': {exc}") from None
    adj = np.zeros((v, v), dtype=bool)
    for e in edges:
        x, y = int(e[0]), int(e[1])
        if not (0 <= x < v and 0 <= y < v):
            raise DigraphError(f"edge ({x},{y}) out of range for v={v}")
        if x == y:
            raise LoopError(f"loop at ({x},{x})")
        if adj[y, x]:
            raise TwoCycleError(f"2-cycle at ({min(x, y)},{max(x, y)})")
        adj[x, y] = True
    return Digraph(adj)


def load_digraph(path) -> Digraph:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return digraph_from_json(text)
    return read_digraph(text)

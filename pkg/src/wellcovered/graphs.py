"""Immutable simple undirected graphs and the constructions built on them.

Vertices are always labelled 0..n-1.  Adjacency is stored as one frozenset
of neighbour indices per vertex; independent-set enumeration downstream
lives on fast neighbourhood intersection, which is why this representation
was chosen over matrices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no multi-edges, symmetric adjacency."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError(f"adjacency length {len(self.adj)} != n = {self.n}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InputError(f"neighbour {u} of vertex {v} out of range")
                if u == v:
                    raise InputError(f"self-loop at vertex {v}")
                if v not in self.adj[u]:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as sorted (u, v) pairs with u < v."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; edges are symmetrised and deduplicated."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) out of range for n = {n}")
        if u == v:
            raise InputError(f"self-loop ({u}, {v}) not allowed")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices: vertex v of g becomes perm[v] of the result."""
    if sorted(perm) != list(range(g.n)):
        raise InputError("perm is not a permutation of the vertex range")
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for v in range(g.n):
        for u in g.adj[v]:
            adj[perm[v]].add(perm[u])
    return Graph(g.n, tuple(frozenset(s) for s in adj))


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - g.adj[v] - {v} for v in range(g.n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are re-indexed by offset |V(g)|."""
    off = g.n
    adj = list(g.adj) + [frozenset(off + u for u in nbrs) for nbrs in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def blowup(g: Graph, v: int, t: int) -> Graph:
    """Replace vertex v by an independent set of t twins sharing v's neighbourhood.

    Labelling convention (fixed for reproducibility): v is first swapped with
    the last index n-1, then the replacement set occupies n-1, n, ..., n+t-2.
    All other labels are stable.
    """
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for n = {g.n}")
    if t < 1:
        raise InputError(f"blowup size must be positive, got {t}")
    n = g.n
    perm = list(range(n))
    perm[v], perm[n - 1] = perm[n - 1], perm[v]
    swapped = relabel(g, perm)
    nbrs = sorted(swapped.adj[n - 1])
    edges = [(a, b) for a, b in swapped.edges() if a != n - 1 and b != n - 1]
    for copy in range(t):
        edges.extend((u, n - 1 + copy) for u in nbrs)
    return new_graph(n + t - 1, edges)


def multi_blowup(g: Graph, ts: Sequence[int]) -> Graph:
    """Blow up every original vertex, processing them in ascending index order."""
    return multi_blowup_slots(g, ts)[0]


def multi_blowup_slots(g: Graph, ts: Sequence[int]) -> tuple[Graph, list[list[int]]]:
    """Like multi_blowup, but also report where each original vertex's copies
    ended up: slots[v] lists the final indices of the ts[v] twins of v."""
    if len(ts) != g.n:
        raise InputError(f"expected {g.n} blowup sizes, got {len(ts)}")
    if any(t < 1 for t in ts):
        raise InputError("blowup sizes must all be positive")
    h = g
    pos = list(range(g.n))  # current index of each not-yet-processed original
    slots: list[list[int]] = []
    for i in range(g.n):
        cur = pos[i]
        last = h.n - 1
        h = blowup(h, cur, ts[i])
        # the swap inside blowup moved the vertex previously at `last` to `cur`
        for j in range(i + 1, g.n):
            if pos[j] == last:
                pos[j] = cur
        for s in slots:
            for idx, x in enumerate(s):
                if x == last:
                    s[idx] = cur
        slots.append(list(range(last, last + ts[i])))
    return h, slots


def lex_product(g: Graph, h: Graph) -> Graph:
    """Lexicographic product: vertex (u, w) is flattened to u * |V(h)| + w;
    (u, w) ~ (u', w') iff uu' is an edge of g, or u = u' and ww' is an edge of h."""
    b = h.n
    edges = []
    for u in range(g.n):
        for w in range(b):
            for w2 in h.adj[w]:
                if w < w2:
                    edges.append((u * b + w, u * b + w2))
        for u2 in g.adj[u]:
            if u < u2:
                edges.extend((u * b + w, u2 * b + w2) for w in range(b) for w2 in range(b))
    return new_graph(g.n * b, edges)


def random_graph(n: int, edge_prob: Fraction | float | int, seed: int) -> Graph:
    """Erdos-Renyi style graph with an exactly rational edge probability.

    The pseudorandom stream is fully determined by the seed, so identical
    (n, edge_prob, seed) triples always produce identical graphs.
    """
    p = Fraction(edge_prob)
    if not 0 <= p <= 1:
        raise InputError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.randrange(p.denominator) < p.numerator:
                edges.append((u, v))
    return new_graph(n, edges)

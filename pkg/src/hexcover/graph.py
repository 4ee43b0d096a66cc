"""Simple undirected graphs of maximum degree 3.

Vertices are ``0..n-1``; adjacency is stored as sorted tuples so a
:class:`Graph` is hashable and safe to share.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_DEGREE = 3


class GraphError(ValueError):
    """Raised when an edge list does not describe a valid graph.

    ``reason`` is one of ``"self-loop"``, ``"duplicate-edge"``,
    ``"vertex-out-of-range"`` and ``"degree-exceeded"``.
    """

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_cubic(self) -> bool:
        return all(len(a) == 3 for a in self.adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]], max_degree: int = MAX_DEGREE) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}", "vertex-out-of-range")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}", "vertex-out-of-range")
        if u == v:
            raise GraphError(f"self-loop at {u}", "self-loop")
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})", "duplicate-edge")
        nbrs[u].add(v)
        nbrs[v].add(u)
        if len(nbrs[u]) > max_degree or len(nbrs[v]) > max_degree:
            w = u if len(nbrs[u]) > max_degree else v
            raise GraphError(f"vertex {w} exceeds degree {max_degree}", "degree-exceeded")
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def from_adjacency(adj: Sequence[Iterable[int]]) -> Graph:
    n = len(adj)
    return build_graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(components(g)) == 1


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best if best == math.inf else int(best)


def normalize_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate a closed walk to start at its minimal vertex and pick the
    lexicographically smaller direction."""
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    bwd = tuple(seq[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    k = len(cycle)
    return [
        (min(cycle[i], cycle[(i + 1) % k]), max(cycle[i], cycle[(i + 1) % k]))
        for i in range(k)
    ]


def enumerate_cycles(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All cycles of length exactly ``k``, each once, in normalized form.

    Each cycle is found from its minimal vertex ``s`` by a DFS restricted to
    vertices above ``s``; of the two traversal directions only the one whose
    second vertex is smaller than its last is kept.
    """
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    out = []
    adj = g.adj
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(u: int) -> None:
            if len(path) == k:
                if s in adj[u] and path[1] < path[-1]:
                    out.append(tuple(path))
                return
            for w in adj[u]:
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    out.sort()
    return out


def is_cycle_of(g: Graph, cycle: Sequence[int]) -> bool:
    if len(set(cycle)) != len(cycle) or len(cycle) < 3:
        return False
    if any(not (0 <= v < g.n) for v in cycle):
        return False
    return all(g.has_edge(u, v) for u, v in cycle_edges(cycle))


def deficiency(g: Graph, vertices: Iterable[int] | None = None) -> int:
    """``3|V| - sum of degrees`` over the graph or over a vertex subset."""
    vs = range(g.n) if vertices is None else vertices
    return sum(MAX_DEGREE - len(g.adj[v]) for v in vs)

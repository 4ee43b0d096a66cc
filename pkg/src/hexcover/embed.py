"""Subgraph (not necessarily induced) embeddings by backtracking."""

from __future__ import annotations

from .graph import Graph


def _pattern_order(pattern: Graph) -> list[int]:
    # BFS order from highest-degree vertex per component, so each vertex after
    # the first of its component has an already-mapped neighbour.
    order: list[int] = []
    seen = [False] * pattern.n
    for s in sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v)):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in pattern.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def find_subgraph_embeddings(host: Graph, pattern: Graph, limit: int = 0) -> list[tuple[int, ...]]:
    """All injective maps ``phi`` (as tuples indexed by pattern vertex) with
    every pattern edge sent to a host edge. ``limit > 0`` stops early."""
    if pattern.n > host.n:
        return []
    order = _pattern_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    # for each pattern vertex: already-placed neighbours
    back = [[w for w in pattern.adj[v] if pos[w] < pos[v]] for v in order]
    phi = [-1] * pattern.n
    used = [False] * host.n
    out: list[tuple[int, ...]] = []

    def extend(i: int) -> bool:
        if i == len(order):
            out.append(tuple(phi))
            return 0 < limit <= len(out)
        v = order[i]
        if back[i]:
            cands = host.adj[phi[back[i][0]]]
        else:
            cands = range(host.n)
        dv = pattern.degree(v)
        for x in cands:
            if used[x] or host.degree(x) < dv:
                continue
            if all(host.has_edge(phi[w], x) for w in back[i]):
                phi[v] = x
                used[x] = True
                if extend(i + 1):
                    return True
                used[x] = False
                phi[v] = -1
        return False

    extend(0)
    return out

"""Hamiltonian cycles and the path systems used to carry them through a
substitution."""

from __future__ import annotations

from typing import Mapping, Sequence

from . import kernels
from .graph import Graph

Path = tuple[int, ...]


def hamiltonian_cycle(g: Graph) -> tuple[int, ...] | None:
    """The first Hamiltonian cycle in DFS order from vertex 0, or None."""
    found = kernels.ham_cycles([list(a) for a in g.adj], 1)
    return tuple(found[0]) if found else None


def least_hamiltonian_cycle(g: Graph) -> tuple[int, ...] | None:
    """The Hamiltonian cycle whose sorted edge list is lexicographically
    least, or None."""
    found = kernels.ham_cycles([list(a) for a in g.adj], 0)
    if not found:
        return None

    def key(c):
        k = len(c)
        return sorted((min(c[i], c[(i + 1) % k]), max(c[i], c[(i + 1) % k])) for i in range(k))

    return tuple(min(found, key=key))


def is_hamiltonian_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    n = g.n
    if len(cycle) != n or sorted(cycle) != list(range(n)):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))


def trace(cycle: Sequence[int], pattern: Graph, emb: Sequence[int]) -> list[Path]:
    """Pieces of ``cycle`` running through an embedded pattern copy, as
    paths in pattern coordinates between degree-1 pattern vertices.

    Each piece starts and ends on a boundary vertex of the copy and visits
    interior vertices only in between.
    """
    inner = {emb[v]: v for v in range(pattern.n) if pattern.degree(v) == 3}
    n = len(cycle)
    start = next(i for i in range(n) if cycle[i] not in inner)
    pieces: list[Path] = []
    i = 0
    while i < n:
        a = cycle[(start + i) % n]
        b = cycle[(start + i + 1) % n]
        if b not in inner:
            i += 1
            continue
        run = [a]
        j = i + 1
        while cycle[(start + j) % n] in inner:
            run.append(cycle[(start + j) % n])
            j += 1
        run.append(cycle[(start + j) % n])
        pieces.append(_to_pattern(run, pattern, emb, inner))
        i = j
    return pieces


def _to_pattern(run, pattern, emb, inner) -> Path:
    """Map a host walk boundary-interior...-boundary to pattern vertices."""
    first = run[1]
    last = run[-2]
    a = _boundary_at(pattern, inner[first], emb, run[0])
    b = _boundary_at(pattern, inner[last], emb, run[-1])
    return (a,) + tuple(inner[v] for v in run[1:-1]) + (b,)


def _boundary_at(pattern: Graph, r: int, emb, host_v: int) -> int:
    for p in pattern.adj[r]:
        if pattern.degree(p) == 1 and emb[p] == host_v:
            return p
    raise ValueError("walk leaves the copy through a non-boundary vertex")


def path_system(g: Graph, pairs: Sequence[tuple[int, int]]) -> list[Path] | None:
    """Vertex-disjoint paths joining each pair of degree-1 vertices of g
    through interior vertices, together visiting every interior vertex."""
    inner = [v for v in range(g.n) if g.degree(v) > 1]
    used = [False] * g.n
    out: list[Path] = []
    todo = list(pairs)

    def viable(end: int) -> bool:
        # every unvisited interior vertex still needs two usable neighbours
        for v in inner:
            if not used[v] and sum(1 for w in g.adj[v] if not used[w] or w == end or g.degree(w) == 1) < 2:
                return False
        return True

    def route(k: int) -> bool:
        if k == len(todo):
            return all(used[v] for v in inner)
        a, b = todo[k]
        path = [a]

        def walk(u: int) -> bool:
            for w in g.adj[u]:
                if w == b and len(path) > 1:
                    path.append(w)
                    out.append(tuple(path))
                    if route(k + 1):
                        return True
                    out.pop()
                    path.pop()
                elif g.degree(w) > 1 and not used[w]:
                    used[w] = True
                    path.append(w)
                    if viable(w) and walk(w):
                        return True
                    path.pop()
                    used[w] = False
            return False

        return walk(a)

    return out if route(0) else None


def splice_cycle(
    cycle: Sequence[int],
    old_to_new: Mapping[int, int],
    replacement: Sequence[Path],
    repl_to_new: Mapping[int, int],
) -> tuple[int, ...]:
    """Rewrite a host cycle after a substitution: every maximal stretch of
    removed vertices is replaced by the replacement path joining the same
    two surviving ends."""
    by_ends: dict[tuple[int, int], list[list[int]]] = {}
    for p in replacement:
        walk = [repl_to_new[v] for v in p]
        by_ends.setdefault((walk[0], walk[-1]), []).append(walk)
        by_ends.setdefault((walk[-1], walk[0]), []).append(walk[::-1])
    n = len(cycle)
    start = next(i for i in range(n) if cycle[i] in old_to_new)
    out: list[int] = []
    i = 0
    while i < n:
        v = cycle[(start + i) % n]
        out.append(old_to_new[v])
        j = i + 1
        while cycle[(start + j) % n] not in old_to_new:
            j += 1
        if j > i + 1:
            a, b = old_to_new[v], old_to_new[cycle[(start + j) % n]]
            walk = by_ends[(a, b)].pop(0)
            by_ends[(b, a)].remove(walk[::-1])
            out.extend(walk[1:-1])
        i = j
    return tuple(out)

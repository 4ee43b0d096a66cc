"""Replacing one configured subgraph of a labeled cubic graph by another.

Both directions of the generation step use this: a seed copy replaced by
its expansion, and an expansion copy replaced by the seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .cdc import CDC
from .config import CycleConfiguration, configs_equivalent, restrict
from .graph import Graph, GraphError, build_graph

Edge = tuple[int, int]
Pair = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Spliced:
    graph: Graph
    labeling: dict[Edge, Pair]
    old_to_new: dict[int, int]  # surviving host vertices
    repl_to_new: dict[int, int]  # every replacement vertex


def labeling_from_cdc(g: Graph, cdc: CDC) -> dict[Edge, Pair]:
    cover: dict[Edge, list[int]] = {}
    for i, c in enumerate(cdc.cycles):
        k = len(c)
        for j in range(k):
            cover.setdefault(_edge(c[j], c[(j + 1) % k]), []).append(i)
    return {e: (ls[0], ls[1]) for e, ls in cover.items()}


def cdc_from_labeling(g: Graph, labeling: Mapping[Edge, Pair]) -> CDC:
    by_label: dict[int, list[Edge]] = {}
    for e, p in labeling.items():
        for x in p:
            by_label.setdefault(x, []).append(e)
    cycles = []
    for lbl in sorted(by_label):
        es = by_label[lbl]
        adj: dict[int, list[int]] = {}
        for u, v in es:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        start = min(adj)
        walk = [start]
        prev, cur = -1, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt or len(adj[cur]) != 2:
                raise ValueError(f"label {lbl} is not a cycle")
            w = nxt[0] if prev != -1 else min(nxt)
            if w == start:
                break
            prev, cur = cur, w
            walk.append(cur)
        if len(walk) != len(es):
            raise ValueError(f"label {lbl} is not a single cycle")
        cycles.append(tuple(walk))
    return CDC.of(cycles)


def splice(
    host: Graph,
    labeling: Mapping[Edge, Pair],
    pattern: CycleConfiguration,
    emb: Sequence[int],
    repl: CycleConfiguration,
) -> Spliced | None:
    """Replace the copy ``emb`` of ``pattern`` in the labeled host by
    ``repl``. Returns None when the copy's configuration is not equivalent to
    ``repl`` or the result would not be a simple graph."""
    induced = restrict(CycleConfiguration.of(host, labeling), pattern.host, emb)
    corr = configs_equivalent(repl, induced)
    if corr is None:
        return None
    return splice_with(host, labeling, pattern, emb, repl, corr.vmap(), corr.lmap())


def splice_with(host, labeling, pattern, emb, repl, vmap, lmap) -> Spliced | None:
    pg = pattern.host
    inner = {emb[v] for v in range(pg.n) if pg.degree(v) == 3}
    removed = {_edge(emb[u], emb[v]) for u, v in pg.edges()}
    keep = [v for v in range(host.n) if v not in inner]
    old_to_new = {v: i for i, v in enumerate(keep)}
    rg = repl.host
    repl_to_new: dict[int, int] = {}
    nxt = len(keep)
    for r in range(rg.n):
        if rg.degree(r) == 3:
            repl_to_new[r] = nxt
            nxt += 1
        else:
            repl_to_new[r] = old_to_new[emb[vmap[r]]]
    new_lab: dict[Edge, Pair] = {}
    for e, p in labeling.items():
        if e not in removed:
            new_lab[_edge(old_to_new[e[0]], old_to_new[e[1]])] = p
    used = {x for p in labeling.values() for x in p}
    fresh = max(used) + 1 if used else 0
    rmap = dict(lmap)
    for x in repl.labels():
        if x not in rmap:
            rmap[x] = fresh
            fresh += 1
    for (u, v), (a, b) in repl.pairs:
        e = _edge(repl_to_new[u], repl_to_new[v])
        if e in new_lab:
            return None
        x, y = sorted((rmap[a], rmap[b]))
        new_lab[e] = (x, y)
    try:
        graph = build_graph(nxt, list(new_lab))
    except GraphError:
        return None
    return Spliced(graph, new_lab, old_to_new, repl_to_new)

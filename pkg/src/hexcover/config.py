"""Cycle configurations on positive-deficiency graphs.

A configuration labels every edge of a degree-<=3 graph with the unordered
pair of hexagons (labels) that will cover it. Per label the edges form
fragments: paths that still have to be closed outside the graph, or complete
6-cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .embed import find_subgraph_embeddings
from .graph import Graph, GraphError, build_graph, deficiency, girth

__all__ = [
    "BoundaryCorrespondence",
    "config_certificate",
    "CycleConfiguration",
    "DegenerateSeed",
    "Fragment",
    "SeedConfigs",
    "configs_equivalent",
    "deficiency",
    "enumerate_seed_configs",
    "equivalences",
    "format_config",
    "fragments",
    "identify_boundary",
    "is_self_similar",
    "parse_config",
    "restrict",
    "seed_embeddings",
    "seed_graph",
    "validate_config",
]

Edge = tuple[int, int]
Pair = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Fragment:
    label: int
    vertices: tuple[int, ...]  # path order; for closed fragments the cycle
    closed: bool

    @property
    def length(self) -> int:
        return len(self.vertices) if self.closed else len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int] | None:
        return None if self.closed else (self.vertices[0], self.vertices[-1])


@dataclass(frozen=True)
class CycleConfiguration:
    host: Graph
    pairs: tuple[tuple[Edge, Pair], ...]  # sorted by edge

    @classmethod
    def of(cls, host: Graph, labeling: Mapping[Edge, Iterable[int]]) -> "CycleConfiguration":
        items = []
        for (u, v), lab in labeling.items():
            a, b = sorted(lab)
            items.append((_edge(u, v), (a, b)))
        items.sort()
        return cls(host, tuple(items))

    def labeling(self) -> dict[Edge, Pair]:
        return dict(self.pairs)

    def labels(self) -> list[int]:
        return sorted({x for _, p in self.pairs for x in p})

    def edges_of(self, label: int) -> list[Edge]:
        return [e for e, p in self.pairs if label in p]

    def boundary(self) -> list[int]:
        return [v for v in range(self.host.n) if 0 < self.host.degree(v) < 3]

    def relabeled(self, mapping: Mapping[int, int]) -> "CycleConfiguration":
        return CycleConfiguration.of(self.host, {e: (mapping[a], mapping[b]) for e, (a, b) in self.pairs})

    def has_complete_cycle(self) -> bool:
        return any(f.closed for lab in self.labels() for f in fragments(self, lab))


def fragments(cfg: CycleConfiguration, label: int) -> list[Fragment]:
    """Maximal connected pieces of one label, each a path or a closed cycle."""
    adj: dict[int, list[int]] = {}
    for u, v in cfg.edges_of(label):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    out = []
    # paths first, walked from their smaller end
    for s in sorted(adj):
        if s in seen or len(adj[s]) != 1:
            continue
        walk = [s]
        seen.add(s)
        prev, cur = -1, s
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt or nxt[0] in seen:
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
            seen.add(cur)
        if walk[-1] < walk[0]:
            walk.reverse()
        out.append(Fragment(label, tuple(walk), False))
    for s in sorted(adj):
        if s in seen:
            continue
        walk = [s]
        seen.add(s)
        prev, cur = -1, s
        while True:
            nxt = [w for w in adj[cur] if w != prev and w not in seen]
            if not nxt:
                break
            prev, cur = cur, min(nxt)
            walk.append(cur)
            seen.add(cur)
        closed = all(len(adj[v]) == 2 for v in walk)
        out.append(Fragment(label, tuple(walk), closed))
    out.sort(key=lambda f: (f.closed, f.vertices))
    return out


# ---------------------------------------------------------------------------
# validity
# ---------------------------------------------------------------------------


def validate_config(cfg: CycleConfiguration) -> list[tuple[str, object]]:
    """Return the violated rules as ``(rule, witness)``; empty means valid."""
    g = cfg.host
    lab = cfg.labeling()
    bad: list[tuple[str, object]] = []
    if set(lab) != set(g.edges()):
        bad.append(("coverage", sorted(set(g.edges()) ^ set(lab))))
        return bad
    for e, (a, b) in lab.items():
        if a == b:
            bad.append(("pair", e))
    for v in range(g.n):
        ps = [lab[_edge(v, w)] for w in g.adj[v]]
        if len(ps) == 3:
            ls = {x for p in ps for x in p}
            if len(set(ps)) != 3 or len(ls) != 3:
                bad.append(("three-labels", v))
        elif len(ps) == 2:
            if len(set(ps[0]) & set(ps[1])) != 1:
                bad.append(("pass-through", v))
    ldeg: dict[tuple[int, int], int] = {}
    for (u, v), p in lab.items():
        for x in p:
            ldeg[(u, x)] = ldeg.get((u, x), 0) + 1
            ldeg[(v, x)] = ldeg.get((v, x), 0) + 1
    over = sorted(k for k, d in ldeg.items() if d > 2)
    if over:
        bad.append(("label-degree", over[0]))
        return bad
    for lbl in cfg.labels():
        frs = fragments(cfg, lbl)
        closed = [f for f in frs if f.closed]
        if closed:
            if len(frs) > 1 or closed[0].length != 6:
                bad.append(("closed-length", lbl))
        else:
            total = sum(f.length for f in frs)
            # every open fragment needs at least one connecting edge
            if total + len(frs) > 6:
                bad.append(("open-length", lbl))
    bad.extend(_forced_closure_conflicts(cfg, lab))
    return bad


def _forced_closure_conflicts(cfg: CycleConfiguration, lab: dict[Edge, Pair]) -> list[tuple[str, object]]:
    """A lone 5-edge fragment can only close by the edge between its ends.

    If two labels are forced onto the same new edge, that edge carries their
    pair, which must not already occur at either end; three labels can never
    share one edge; and the ends must not already be adjacent.
    """
    g = cfg.host
    forced: dict[Edge, list[int]] = {}
    for lbl in cfg.labels():
        frs = fragments(cfg, lbl)
        if len(frs) == 1 and not frs[0].closed and frs[0].length == 5:
            u, v = frs[0].ends
            forced.setdefault(_edge(u, v), []).append(lbl)
    bad = []
    for (u, v), ls in forced.items():
        if g.has_edge(u, v) or len(ls) > 2:
            bad.append(("forced-closure", (u, v)))
        elif len(ls) == 2:
            pair = tuple(sorted(ls))
            if any(lab[_edge(x, w)] == pair for x in (u, v) for w in g.adj[x]):
                bad.append(("forced-closure", (u, v)))
    return bad


# ---------------------------------------------------------------------------
# seeds and their configurations
# ---------------------------------------------------------------------------


def seed_graph(g: int) -> Graph:
    """The g-cycle ``0..g-1`` with pendant ``g+i`` attached to ``i``."""
    if not 3 <= g <= 6:
        raise ValueError(f"seed girth must be in 3..6, got {g}")
    edges = [(i, (i + 1) % g) for i in range(g)] + [(i, g + i) for i in range(g)]
    return build_graph(2 * g, edges)


def _seed_config(g: int, ring: Sequence[Pair]) -> CycleConfiguration:
    """Configuration of the seed from the pairs on its ring edges ``i, i+1``."""
    lab: dict[Edge, Pair] = {}
    for i in range(g):
        lab[_edge(i, (i + 1) % g)] = ring[i]
        a, b = sorted(set(ring[i - 1]) ^ set(ring[i]))
        lab[(i, g + i)] = (a, b)
    return CycleConfiguration.of(seed_graph(g), lab)


def _canonical_rings(ring: Sequence[Pair]) -> list[tuple[Pair, ...]]:
    """Every first-appearance renaming of the labels along ``ring``."""
    out = []

    def rec(i: int, ren: dict[int, int], acc: list[Pair]) -> None:
        if i == len(ring):
            out.append(tuple(acc))
            return
        fresh = [x for x in ring[i] if x not in ren]
        orders = [fresh] if len(fresh) < 2 else [fresh, fresh[::-1]]
        for order in orders:
            r = dict(ren)
            for x in order:
                r[x] = len(r)
            a, b = sorted(r[x] for x in ring[i])
            rec(i + 1, r, acc + [(a, b)])

    rec(0, {}, [])
    return out


def _ring_canon(g: int, ring: Sequence[Pair]) -> tuple[Pair, ...]:
    best = None
    for r in range(g):
        for s in (1, -1):
            if s == 1:
                seq = [ring[(r + i) % g] for i in range(g)]
            else:
                seq = [ring[(r - i - 1) % g] for i in range(g)]
            for t in _canonical_rings(seq):
                if best is None or t < best:
                    best = t
    return best


@dataclass(frozen=True)
class DegenerateSeed:
    """A seed configuration that closes up once some pendants are merged.

    ``pendants`` lists the merged pendant pairs as seed vertex ids and
    ``merged`` the two labels that become one cycle, if any.
    """

    index: int
    pendants: tuple[tuple[int, int], ...]
    merged: tuple[int, int] | None
    config: CycleConfiguration

    def describe(self) -> str:
        text = f"config {self.index}: pendants {list(self.pendants)} identified"
        if self.merged:
            text += f", labels {self.merged[0]}={self.merged[1]}"
        return text


@dataclass(frozen=True)
class SeedConfigs:
    girth: int
    configs: tuple[CycleConfiguration, ...]
    degenerate: tuple[DegenerateSeed, ...]


def enumerate_seed_configs(g: int) -> SeedConfigs:
    """All valid configurations of the girth-g seed, one per symmetry class.

    Classes are taken under the seed's dihedral automorphisms combined with
    label renaming; each representative uses labels 0..k-1 in first
    appearance order along the ring.
    """
    host = seed_graph(g)
    found: set[tuple[Pair, ...]] = set()

    def rec(ring: list[Pair], used: int) -> None:
        if len(ring) == g:
            if len(set(ring[-1]) & set(ring[0])) != 1:
                return
            canon = _ring_canon(g, ring)
            if canon not in found and not validate_config(_seed_config(g, ring)):
                found.add(canon)
            return
        for a in range(used + 2):
            for b in range(a + 1, used + 2):
                pair = (a, b)
                fresh = [x for x in pair if x >= used]
                if fresh and fresh != list(range(used, used + len(fresh))):
                    continue
                if ring and len(set(ring[-1]) & set(pair)) != 1:
                    continue
                rec(ring + [pair], used + len(fresh))

    rec([], 0)
    configs = tuple(_seed_config(g, ring) for ring in sorted(found))
    assert all(c.host == host for c in configs)
    return SeedConfigs(g, configs, tuple(_degenerate_configs(g, configs)))


def _degenerate_configs(g: int, configs: Sequence[CycleConfiguration]) -> list[DegenerateSeed]:
    """Seed configurations that survive identifying pendant vertices.

    Identifications that keep the girth at g are tried, with any merge of two
    labels; a merged pendant then has degree 2. Those that become a full
    6-CDC configuration of a cubic graph after joining the merged vertices
    are returned.
    """
    out = []
    for idx, cfg in enumerate(configs):
        labels = cfg.labels()
        pend_pairs = [(g + i, g + j) for i in range(g) for j in range(i + 1, g)]
        for k in range(1, len(pend_pairs) + 1):
            for chosen in _disjoint_subsets(pend_pairs, k):
                merges = [None] + [(a, b) for a in labels for b in labels if a < b]
                for merge in merges:
                    res = identify_boundary(cfg, chosen, merge, g)
                    if res is not None:
                        out.append(DegenerateSeed(idx, tuple(chosen), merge, res))
    return out


def _disjoint_subsets(pairs, k):
    def rec(start, acc, used):
        if len(acc) == k:
            yield list(acc)
            return
        for i in range(start, len(pairs)):
            a, b = pairs[i]
            if a in used or b in used:
                continue
            acc.append(pairs[i])
            yield from rec(i + 1, acc, used | {a, b})
            acc.pop()

    yield from rec(0, [], frozenset())


def identify_boundary(
    cfg: CycleConfiguration,
    pairs: Sequence[tuple[int, int]],
    merge: tuple[int, int] | None,
    g: int,
) -> CycleConfiguration | None:
    """Merge pairs of degree-1 vertices (and optionally two labels), then
    join the merged vertices. Returns the result if it is a cubic graph of
    girth g whose labels all close into hexagons, else None."""
    host = cfg.host
    if len(pairs) != 2:
        return None
    vmap = list(range(host.n))
    for a, b in pairs:
        if host.degree(a) != 1 or host.degree(b) != 1:
            return None
        vmap[b] = a
    edges: dict[Edge, Pair] = {}
    for (u, v), p in cfg.pairs:
        e = _edge(vmap[u], vmap[v])
        if e[0] == e[1] or e in edges:
            return None
        edges[e] = p
    if merge is not None:
        keep, gone = merge
        edges = {e: tuple(sorted({keep if x == gone else x for x in p})) for e, p in edges.items()}
        if any(len(p) != 2 for p in edges.values()):
            return None
    verts = sorted({v for e in edges for v in e})
    ren = {v: i for i, v in enumerate(verts)}
    merged_host = build_graph(len(verts), [(ren[u], ren[v]) for u, v in edges])
    if girth(merged_host) < g:
        return None
    merged_cfg = CycleConfiguration.of(merged_host, {(ren[u], ren[v]): p for (u, v), p in edges.items()})
    if validate_config(merged_cfg):
        return None
    u, v = (ren[a] for a, _ in pairs)
    if merged_host.has_edge(u, v):
        return None
    lab = merged_cfg.labeling()
    exits = []
    for x in (u, v):
        ps = [set(lab[_edge(x, w)]) for w in merged_host.adj[x]]
        if len(ps) != 2:
            return None
        exits.append(tuple(sorted(ps[0] ^ ps[1])))
    if exits[0] != exits[1] or len(exits[0]) != 2:
        return None
    try:
        full = build_graph(merged_host.n, merged_host.edges() + [(u, v)])
    except GraphError:
        return None
    if any(full.degree(x) != 3 for x in range(full.n)):
        return None
    lab[_edge(u, v)] = exits[0]
    done = CycleConfiguration.of(full, lab)
    if validate_config(done) or girth(full) < g:
        return None
    if not all(f.closed for l in done.labels() for f in fragments(done, l)):
        return None
    return done


# ---------------------------------------------------------------------------
# equivalence and self-similarity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryCorrespondence:
    """``vertex_map[u]`` is the boundary vertex of the second configuration
    matched with boundary vertex u of the first; ``label_map`` does the same
    for labels with open fragments. ``through`` lists, per matched vertex,
    the two labels leaving there and their fragment lengths."""

    vertex_map: tuple[tuple[int, int], ...]
    label_map: tuple[tuple[int, int], ...]
    through: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]

    def vmap(self) -> dict[int, int]:
        return dict(self.vertex_map)

    def lmap(self) -> dict[int, int]:
        return dict(self.label_map)


def _open_structure(cfg: CycleConfiguration):
    """Boundary pairs and open fragments keyed by (label, frozenset(ends))."""
    host = cfg.host
    lab = cfg.labeling()
    bpairs = {}
    for v in range(host.n):
        d = host.degree(v)
        if d == 1:
            bpairs[v] = lab[_edge(v, host.adj[v][0])]
        elif d == 2:
            return None
    frag = {}
    for lbl in cfg.labels():
        for f in fragments(cfg, lbl):
            if not f.closed:
                frag.setdefault(lbl, []).append((frozenset(f.ends), f.length))
    return bpairs, frag


def _fkey(item):
    ends, n = item
    return (sorted(ends), n)


def configs_equivalent(
    cfg1: CycleConfiguration, cfg2: CycleConfiguration
) -> BoundaryCorrespondence | None:
    """Search boundary matchings and label bijections under which the two
    configurations present identical open fragments (same labels, same end
    points, same lengths). Only degree-1 boundaries are matched."""
    return next(equivalences(cfg1, cfg2), None)


def equivalences(cfg1: CycleConfiguration, cfg2: CycleConfiguration) -> Iterator[BoundaryCorrespondence]:
    """Every correspondence under which the configurations are equivalent,
    in search order."""
    s1 = _open_structure(cfg1)
    s2 = _open_structure(cfg2)
    if s1 is None or s2 is None:
        return
    b1, f1 = s1
    b2, f2 = s2
    if len(b1) != len(b2) or len(f1) != len(f2):
        return
    if deficiency(cfg1.host) != deficiency(cfg2.host):
        return
    if sorted(sorted(x[1] for x in v) for v in f1.values()) != sorted(sorted(x[1] for x in v) for v in f2.values()):
        return
    order = sorted(b1)
    targets = sorted(b2)
    vmap: dict[int, int] = {}
    lmap: dict[int, int] = {}
    used: set[int] = set()

    def labels_ok(final: bool) -> bool:
        for l1, frs in f1.items():
            l2 = lmap.get(l1)
            if l2 is None:
                continue
            mapped = [(frozenset(vmap[x] for x in ends), n) for ends, n in frs if ends <= vmap.keys()]
            if final:
                if sorted(mapped, key=_fkey) != sorted(f2[l2], key=_fkey):
                    return False
            elif any(item not in f2[l2] for item in mapped):
                return False
        return True

    def result() -> BoundaryCorrespondence:
        through = []
        for u in order:
            p = b1[u]
            lens = []
            for x in p:
                n = next(n for ends, n in f1[x] if u in ends)
                lens.append((x, n))
            through.append((u, tuple(lens)))
        return BoundaryCorrespondence(tuple(sorted(vmap.items())), tuple(sorted(lmap.items())), tuple(through))

    def rec(i: int) -> Iterator[BoundaryCorrespondence]:
        if i == len(order):
            if len(lmap) == len(f1) and labels_ok(True):
                yield result()
            return
        u = order[i]
        p = b1[u]
        for v in targets:
            if v in used:
                continue
            q = b2[v]
            for a, b in ((q[0], q[1]), (q[1], q[0])):
                saved = dict(lmap)
                ok = True
                for x, y in ((p[0], a), (p[1], b)):
                    if x in lmap:
                        ok = ok and lmap[x] == y
                    elif y in lmap.values():
                        ok = False
                    else:
                        lmap[x] = y
                if ok:
                    vmap[u] = v
                    used.add(v)
                    if labels_ok(False):
                        yield from rec(i + 1)
                    del vmap[u]
                    used.discard(v)
                lmap.clear()
                lmap.update(saved)

    yield from rec(0)


def restrict(cfg: CycleConfiguration, pattern: Graph, emb: Sequence[int]) -> CycleConfiguration:
    """The configuration induced on an embedded copy of ``pattern``,
    expressed on the pattern's own vertex numbering."""
    lab = cfg.labeling()
    return CycleConfiguration.of(
        pattern, {(u, v): lab[_edge(emb[u], emb[v])] for u, v in pattern.edges()}
    )


def seed_embeddings(host: Graph, g: int) -> list[tuple[int, ...]]:
    """Embeddings of the girth-g seed, one per image subgraph."""
    pat = seed_graph(g)
    seen = set()
    out = []
    for emb in find_subgraph_embeddings(host, pat):
        key = frozenset(_edge(emb[u], emb[v]) for u, v in pat.edges())
        if key not in seen:
            seen.add(key)
            out.append(emb)
    return out


def is_self_similar(
    candidate: CycleConfiguration,
    seed: CycleConfiguration,
    exclude_complete_cycle_isomorphs: bool = False,
) -> bool:
    """Equivalent to the seed, and every embedded seed copy carries a
    configuration equivalent to it. With the flag set, copies whose induced
    configuration contains a complete hexagon are exempt."""
    g = (seed.host.n) // 2
    if candidate.host.n <= seed.host.n:
        return False
    if configs_equivalent(candidate, seed) is None:
        return False
    embs = seed_embeddings(candidate.host, g)
    if not embs:
        return False
    for emb in embs:
        sub = restrict(candidate, seed.host, emb)
        if exclude_complete_cycle_isomorphs and sub.has_complete_cycle():
            continue
        if configs_equivalent(sub, seed) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def format_config(cfg: CycleConfiguration) -> str:
    """``n`` on the first line, then ``u v i j`` per edge."""
    lines = [str(cfg.host.n)]
    lines.extend(f"{u} {v} {a} {b}" for (u, v), (a, b) in cfg.pairs)
    return "\n".join(lines) + "\n"


def parse_config(text: str) -> CycleConfiguration:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].isdigit():
        raise ValueError("configuration block must start with the vertex count")
    n = int(lines[0])
    lab = {}
    for line in lines[1:]:
        parts = line.split(" ")
        if len(parts) != 4 or not all(p.isdigit() for p in parts):
            raise ValueError(f"bad configuration line {line!r}")
        u, v, a, b = map(int, parts)
        lab[(u, v)] = (a, b)
    return CycleConfiguration.of(build_graph(n, list(lab)), lab)


def config_certificate(cfg: CycleConfiguration) -> bytes:
    """Certificate of a configured graph up to vertex and label renaming.

    Built from an auxiliary coloured graph with one node per vertex, per
    edge and per label; edge nodes join their ends and their two labels.
    """
    from .canon import general_canonical_labeling

    g = cfg.host
    labels = cfg.labels()
    lidx = {x: g.n + len(cfg.pairs) + i for i, x in enumerate(labels)}
    total = g.n + len(cfg.pairs) + len(labels)
    adj: list[list[int]] = [[] for _ in range(total)]
    for k, ((u, v), (a, b)) in enumerate(cfg.pairs):
        node = g.n + k
        for x in (u, v, lidx[a], lidx[b]):
            adj[node].append(x)
            adj[x].append(node)
    colors = [0] * g.n + [1] * len(cfg.pairs) + [2] * len(labels)
    return general_canonical_labeling(adj, colors)[0]

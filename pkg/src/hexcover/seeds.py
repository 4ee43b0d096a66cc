"""Seeds, their self-similar expansions and the base graphs of each girth.

For every configuration of the girth-g seed S_g the expansion search
derives I_g (the smallest self-similar proper supergraph) and every base
graph B_g, classifies the bases by type and attaches the Hamiltonian data
used to carry cycles through substitutions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .canon import are_isomorphic, canonical_form
from .cdc import CDC, check_structure_theorems, verify_6cdc
from .config import (
    BoundaryCorrespondence,
    CycleConfiguration,
    DegenerateSeed,
    config_certificate,
    configs_equivalent,
    enumerate_seed_configs,
    fragments,
    identify_boundary,
    is_self_similar,
    restrict,
    seed_graph,
)
from .embed import find_subgraph_embeddings
from .expand import Expander
from .graph import Graph, deficiency, enumerate_cycles, girth
from .hamilton import Path, least_hamiltonian_cycle, path_system, trace
from .splice import cdc_from_labeling, labeling_from_cdc, splice

log = logging.getLogger(__name__)

Edge = tuple[int, int]


def build_S(g: int) -> Graph:
    return seed_graph(g)


def default_bound(g: int, seed: CycleConfiguration) -> int:
    """Vertex bound for the expansion searches.

    Four times the seed, except for the seed holding a complete hexagon,
    whose search tree grows far faster; there the bound is twice the seed.
    """
    size = 2 * g
    return 2 * size if seed.has_complete_cycle() else 4 * size


def _expander(seed: CycleConfiguration, g: int, bound: int, freeze: bool) -> Expander:
    lengths = frozenset(
        f.length for x in seed.labels() for f in fragments(seed, x) if not f.closed
    )
    return Expander(
        seed,
        g,
        bound,
        distinct_pairs=g == 6,
        hexagons_covered=seed.has_complete_cycle(),
        open_lengths=lengths if freeze else frozenset(),
    )


def uses_exemption(g: int, seed: CycleConfiguration) -> bool:
    """Whether seed copies holding a complete hexagon are left out."""
    return g == 6 and not seed.has_complete_cycle()


# ---------------------------------------------------------------------------
# I_g
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IInstance:
    config: CycleConfiguration
    # boundary of I onto boundary of S, labels of I onto labels of S
    correspondence: BoundaryCorrespondence
    # distinct minimal candidates found (1 when I is unique)
    alternatives: int

    @property
    def graph(self) -> Graph:
        return self.config.host


@dataclass(frozen=True)
class SearchOutcome:
    bound: int
    nodes: int
    bound_reached: bool


def derive_I(
    g: int, seed: CycleConfiguration, max_vertices: int | None = None
) -> tuple[IInstance | None, SearchOutcome]:
    """Smallest self-similar proper supergraph of the seed.

    Bounds grow two vertices at a time, so the first bound that yields a
    candidate gives the minimal vertex count; ties are broken by edge count
    and then by configuration certificate.
    """
    top = max_vertices or default_bound(g, seed)
    flag = uses_exemption(g, seed)
    nodes = 0
    reached = False
    for bound in range(seed.host.n + 2, top + 1, 2):
        ex = _expander(seed, g, bound, freeze=True)
        found: dict[bytes, CycleConfiguration] = {}

        def leaf(e: Expander) -> None:
            if len(e.frozen) != g:
                return
            c = e.config()
            if girth(c.host) == g and is_self_similar(c, seed, flag):
                found.setdefault(config_certificate(c), c)

        ex.run(leaf, freeze=True, max_frozen=g)
        nodes += ex.stats.nodes
        reached = ex.stats.cut_by_bound > 0
        if found:
            best = min(found.items(), key=lambda kv: (kv[1].host.n, kv[1].host.m, kv[0]))[1]
            small = [c for c in found.values() if c.host.n == best.host.n and c.host.m == best.host.m]
            corr = configs_equivalent(best, seed)
            assert corr is not None
            return IInstance(best, corr, len(small)), SearchOutcome(bound, nodes, False)
        if not reached:
            break
    return None, SearchOutcome(top, nodes, reached)


# ---------------------------------------------------------------------------
# B_g
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BInstance:
    graph: Graph
    cdc: CDC
    type: str  # "i", "ii" or "iii"
    # the seed copy the entry was grown from: vertices 0..2g-1 unless degenerate
    embedding: tuple[int, ...]
    hamiltonian: tuple[int, ...]
    trace: tuple[Path, ...]
    # paths through I joining the same boundary pairs as ``trace``
    i_paths: tuple[Path, ...] | None = None
    degenerate: bool = False

    @property
    def labeling(self) -> dict[Edge, tuple[int, int]]:
        return labeling_from_cdc(self.graph, self.cdc)


def _completions(g: int, seed: CycleConfiguration, bound: int):
    ex = _expander(seed, g, bound, freeze=False)
    found: dict[bytes, CycleConfiguration] = {}

    def leaf(e: Expander) -> None:
        c = e.config()
        if girth(c.host) == g:
            found.setdefault(config_certificate(c), c)

    ex.run(leaf)
    out = sorted(found.items(), key=lambda kv: (kv[1].host.n, kv[0]))
    return [c for _, c in out], ex.stats


def i_copies(cfg: CycleConfiguration, inst: IInstance) -> list[tuple[int, ...]]:
    """Copies of I in a configured graph carrying an equivalent configuration,
    one per image edge set."""
    pattern = inst.graph
    seen: set[frozenset] = set()
    out = []
    for emb in find_subgraph_embeddings(cfg.host, pattern):
        key = frozenset(_edge(emb[u], emb[v]) for u, v in pattern.edges())
        if key in seen:
            continue
        seen.add(key)
        if configs_equivalent(inst.config, restrict(cfg, pattern, emb)) is not None:
            out.append(emb)
    return out


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def hexagons_in_cdc(g: Graph, cdc: CDC) -> bool:
    return set(enumerate_cycles(g, 6)) <= set(cdc.cycles)


@dataclass(frozen=True)
class Reversal:
    """What replacing one I copy by the seed does to a configured graph."""

    simple: bool
    girth: float
    new_hexagon_outside_cdc: bool
    config: CycleConfiguration | None


def reverse_substitution(cfg: CycleConfiguration, emb, inst: IInstance, seed: CycleConfiguration) -> Reversal:
    res = splice(cfg.host, cfg.labeling(), inst.config, emb, seed)
    if res is None:
        return Reversal(False, 0, False, None)
    new = CycleConfiguration.of(res.graph, res.labeling)
    gi = girth(res.graph)
    outside = False
    if res.graph.is_cubic():
        try:
            cdc = cdc_from_labeling(res.graph, res.labeling)
            outside = not hexagons_in_cdc(res.graph, cdc)
        except ValueError:
            outside = True
    return Reversal(True, gi, outside, new)


def classify_B(
    g: int, seed: CycleConfiguration, inst: IInstance | None, cfg: CycleConfiguration
) -> str | None:
    """Type of a cubic completion, or None when it is generated from a
    smaller graph by substituting I for the seed."""
    copies = i_copies(cfg, inst) if inst is not None else []
    if not copies:
        return "i"
    complete = seed.has_complete_cycle()
    for emb in copies:
        rev = reverse_substitution(cfg, emb, inst, seed)
        if not rev.simple or rev.girth < g:
            continue
        if complete and rev.new_hexagon_outside_cdc:
            continue
        return None
    if complete:
        return "iii"
    return "ii"


@dataclass(frozen=True)
class BSearch:
    instances: tuple[tuple[CycleConfiguration, str], ...]
    redundant: int
    outcome: SearchOutcome
    # completions failing the cycle adjacency graph conditions
    rejected: int = 0


def derive_B(
    g: int, seed: CycleConfiguration, inst: IInstance | None, max_vertices: int | None = None
) -> BSearch:
    bound = max_vertices or default_bound(g, seed)
    comps, stats = _completions(g, seed, bound)
    keep = []
    graphs: set[bytes] = set()
    redundant = rejected = 0
    for c in comps:
        if seed.has_complete_cycle() and not _adjacency_ok(c):
            rejected += 1
            continue
        t = classify_B(g, seed, inst, c)
        if t is None:
            redundant += 1
            continue
        # one instance per graph; further covers of it add nothing new
        key = canonical_form(c.host)
        if key not in graphs:
            graphs.add(key)
            keep.append((c, t))
    return BSearch(tuple(keep), redundant, SearchOutcome(bound, stats.nodes, stats.cut_by_bound > 0), rejected)


def _adjacency_ok(cfg: CycleConfiguration) -> bool:
    cdc = cdc_from_labeling(cfg.host, cfg.labeling())
    return build_cycle_adjacency_graph(cfg.host, cdc).is_regular(6) and triangle_correspondence(cfg.host, cdc)


# ---------------------------------------------------------------------------
# Hamiltonian data
# ---------------------------------------------------------------------------


def pairing(pieces: Sequence[Path]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(tuple(sorted((p[0], p[-1]))) for p in pieces))


def equivalent_paths(inst: IInstance, pieces: Sequence[Path]) -> list[Path] | None:
    """Paths in I joining the boundary vertices matched with the ends of the
    seed-side pieces and visiting every interior vertex of I."""
    to_i = {s: i for i, s in inst.correspondence.vertex_map}
    pairs = [(to_i[p[0]], to_i[p[-1]]) for p in pieces]
    return path_system(inst.graph, pairs)


def derive_ham_data(
    b_graph: Graph, emb: Sequence[int], seed: CycleConfiguration
) -> tuple[tuple[int, ...], tuple[Path, ...]]:
    cyc = least_hamiltonian_cycle(b_graph)
    if cyc is None:
        raise AssertionError("base graph without a Hamiltonian cycle")
    return cyc, tuple(trace(cyc, seed.host, emb))


# ---------------------------------------------------------------------------
# cycle adjacency graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleAdjacencyGraph:
    """Cycles of a CDC, adjacent when they share a host edge."""

    adj: tuple[tuple[int, ...], ...]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def is_regular(self, k: int) -> bool:
        return all(len(a) == k for a in self.adj)

    def triangles(self) -> list[tuple[int, int, int]]:
        out = []
        for a in range(len(self.adj)):
            for b in self.adj[a]:
                if b <= a:
                    continue
                for c in self.adj[b]:
                    if c > b and a in self.adj[c]:
                        out.append((a, b, c))
        return out


def build_cycle_adjacency_graph(g: Graph, cdc: CDC) -> CycleAdjacencyGraph:
    adj: list[set[int]] = [set() for _ in cdc.cycles]
    for ids in cdc.edge_cover().values():
        a, b = ids
        adj[a].add(b)
        adj[b].add(a)
    return CycleAdjacencyGraph(tuple(tuple(sorted(s)) for s in adj))


def vertex_triangles(g: Graph, cdc: CDC) -> dict[int, tuple[int, int, int]]:
    """The three cycles through each host vertex."""
    through: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for i, c in enumerate(cdc.cycles):
        for v in c:
            through[v].add(i)
    return {v: tuple(sorted(s)) for v, s in through.items()}


def triangle_correspondence(g: Graph, cdc: CDC) -> bool:
    """Host vertices biject with the triangles of the cycle adjacency graph."""
    d = build_cycle_adjacency_graph(g, cdc)
    tri = set(d.triangles())
    by_vertex = vertex_triangles(g, cdc)
    images = set(by_vertex.values())
    return len(images) == g.n and images == tri


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


@dataclass
class SeedCatalogEntry:
    girth: int
    index: int
    name: str
    seed: CycleConfiguration
    I: IInstance | None
    B: list[BInstance]
    i_search: SearchOutcome
    b_search: SearchOutcome
    redundant: int = 0
    degenerate: DegenerateSeed | None = None

    @property
    def key(self) -> str:
        return self.name

    @property
    def exemption(self) -> bool:
        return uses_exemption(self.girth, self.seed)


@dataclass(frozen=True)
class Anchor:
    name: str
    passed: bool
    detail: str


@dataclass
class SeedCatalog:
    entries: list[SeedCatalogEntry]
    anchors: list[Anchor] = field(default_factory=list)

    def by_girth(self, g: int) -> list[SeedCatalogEntry]:
        return [e for e in self.entries if e.girth == g]

    def entry(self, name: str) -> SeedCatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.anchors)


def _b_instance(g, seed, inst, cfg, typ, emb=None, degenerate=False) -> BInstance:
    cdc = cdc_from_labeling(cfg.host, cfg.labeling())
    emb = tuple(emb if emb is not None else range(2 * g))
    cyc, pieces = derive_ham_data(cfg.host, emb, seed)
    ip = None
    if inst is not None:
        found = equivalent_paths(inst, pieces)
        ip = tuple(found) if found is not None else None
    return BInstance(cfg.host, cdc, typ, emb, cyc, pieces, ip, degenerate)


def degenerate_start(d: DegenerateSeed, g: int) -> tuple[CycleConfiguration, tuple[int, ...]]:
    """The closed-up seed and the (non-injective) seed embedding into it."""
    cfg = d.config
    # rebuild the vertex map used by identify_boundary
    vmap = list(range(2 * g))
    for a, b in d.pendants:
        vmap[b] = a
    verts = sorted(set(vmap))
    ren = {v: i for i, v in enumerate(verts)}
    return cfg, tuple(ren[vmap[v]] for v in range(2 * g))


def degenerate_substitution(entry: SeedCatalogEntry) -> CycleConfiguration | None:
    """Close up I the way the degenerate seed was closed up."""
    d = entry.degenerate
    if d is None or entry.I is None:
        return None
    corr = entry.I.correspondence
    to_i = {s: i for i, s in corr.vertex_map}
    l_to_i = {s: i for i, s in corr.label_map}
    pairs = [(to_i[a], to_i[b]) for a, b in d.pendants]
    merge = None
    if d.merged is not None:
        merge = tuple(sorted((l_to_i[d.merged[0]], l_to_i[d.merged[1]])))
    return identify_boundary(entry.I.config, pairs, merge, entry.girth)


def _name_entries(g: int, entries: list[SeedCatalogEntry]) -> None:
    """Letters follow each configuration's behaviour; see the decisions
    ledger for the rules."""
    if g == 3:
        entries[0].name = "3"
        return
    names: dict[int, str] = {}
    rest = list(range(len(entries)))
    if g == 4:
        deg = [i for i in rest if entries[i].degenerate is not None]
        for i in deg[:1]:
            names[i] = "4b"
        others = [i for i in rest if i not in names]
        for i, letter in zip(others, "ac"):
            names[i] = "4" + letter
    elif g == 5:
        no_i = [i for i in rest if entries[i].I is None]
        for i in no_i[:1]:
            names[i] = "5b"
        typed_ii = [i for i in rest if i not in names and any(b.type == "ii" for b in entries[i].B)]
        for i in typed_ii[:1]:
            names[i] = "5c"
        others = [i for i in rest if i not in names]
        for i in others[:1]:
            names[i] = "5a"
    else:
        from .named import heawood

        hw = heawood()
        comp = [i for i in rest if entries[i].seed.has_complete_cycle()]
        for i in comp[:1]:
            names[i] = "6e"
        hb = [i for i in rest if i not in names and any(are_isomorphic(b.graph, hw) for b in entries[i].B)]
        for i in hb[:1]:
            names[i] = "6b"
        with_i = [i for i in rest if i not in names and entries[i].I is not None]
        for i in with_i[:1]:
            names[i] = "6d"
        others = [i for i in rest if i not in names]
        for i, letter in zip(others, "ac"):
            names[i] = "6" + letter
    for i, e in enumerate(entries):
        e.name = names.get(i, f"{g}?{i}")


def derive_entries(g: int, bounds: dict[int, int] | None = None) -> list[SeedCatalogEntry]:
    sc = enumerate_seed_configs(g)
    entries = []
    for idx, seed in enumerate(sc.configs):
        bound = (bounds or {}).get(idx)
        inst, i_out = derive_I(g, seed, bound)
        bs = derive_B(g, seed, inst, bound)
        B = [_b_instance(g, seed, inst, c, t) for c, t in bs.instances]
        deg = next((d for d in sc.degenerate if d.index == idx), None)
        entry = SeedCatalogEntry(g, idx, "", seed, inst, B, i_out, bs.outcome, bs.redundant, deg)
        if deg is not None:
            cfg, emb = degenerate_start(deg, g)
            entry.B.append(_b_instance(g, seed, inst, cfg, "i", emb, degenerate=True))
        entries.append(entry)
        log.info(
            "girth %d config %d: I %s, %d bases, %d redundant",
            g, idx, inst.graph.n if inst else None, len(entry.B), bs.redundant,
        )
    _name_entries(g, entries)
    return entries


def build_catalog(girths: Sequence[int] = (3, 4, 5, 6)) -> SeedCatalog:
    entries: list[SeedCatalogEntry] = []
    for g in girths:
        entries.extend(derive_entries(g))
    cat = SeedCatalog(entries)
    cat.anchors = check_anchors(cat)
    return cat


# ---------------------------------------------------------------------------
# anchors
# ---------------------------------------------------------------------------


def _iso_names(graphs: Sequence[Graph], target: Graph) -> bool:
    return bool(graphs) and all(are_isomorphic(h, target) for h in graphs)


def check_anchors(cat: SeedCatalog) -> list[Anchor]:
    from .circulant import mobius_ladder, torus_2layer
    from .named import heawood

    out: list[Anchor] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        out.append(Anchor(name, bool(ok), detail))

    girths = {e.girth for e in cat.entries}
    counts = {3: 1, 4: 3, 5: 3, 6: 5}
    for g in sorted(girths):
        es = cat.by_girth(g)
        add(f"g={g} configuration count", len(es) == counts[g], f"{len(es)} found, {counts[g]} expected")
        for e in es:
            add(f"S_{e.name} deficiency", deficiency(e.seed.host) == 2 * g)
            if e.I is not None:
                add(
                    f"I_{e.name} deficiency and girth",
                    deficiency(e.I.graph) == 2 * g and girth(e.I.graph) == g,
                    f"n={e.I.graph.n} deficiency={deficiency(e.I.graph)}",
                )
            for k, b in enumerate(e.B):
                rep = verify_6cdc(b.graph, b.cdc.cycles)
                th = check_structure_theorems(b.graph, b.cdc)
                add(
                    f"B_{e.name}[{k}] girth, 6-CDC and structure",
                    girth(b.graph) == g and rep.ok and th.ok,
                    "" if th.ok else f"theorem checks {th.checks}",
                )
    if 3 in girths:
        e = cat.by_girth(3)[0]
        plain = [b for b in e.B if not b.degenerate]
        add("B_3 is the prism (T_6,2), type (i)",
            len(plain) == 1 and are_isomorphic(plain[0].graph, torus_2layer(6)) and plain[0].type == "i",
            f"{[(b.graph.n, b.type) for b in plain]}")
        add("I_3 has 12 vertices", e.I is not None and e.I.graph.n == 12)
    if 4 in girths:
        t8, m8, m6 = torus_2layer(8), mobius_ladder(8), mobius_ladder(6)
        for name in ("4a", "4c"):
            e = cat.entry(name)
            gs = [b.graph for b in e.B if not b.degenerate]
            add(f"B_{name} is T_8,2", len(gs) == 1 and are_isomorphic(gs[0], t8), f"{[h.n for h in gs]}")
        e = cat.entry("4b")
        gs = [b.graph for b in e.B if not b.degenerate]
        has_t8 = sum(are_isomorphic(h, t8) for h in gs)
        has_m8 = sum(are_isomorphic(h, m8) for h in gs)
        add("B_4b is T_8,2 and B_4b' is M_8", len(gs) == 2 and has_t8 == 1 and has_m8 == 1, f"{[h.n for h in gs]}")
        add("every B_4 is type (i)", all(b.type == "i" for x in cat.by_girth(4) for b in x.B))
        deg = [b for b in e.B if b.degenerate]
        add("M_6 is the alternate start of 4b", len(deg) == 1 and are_isomorphic(deg[0].graph, m6))
        closed = degenerate_substitution(e)
        add("closing I_4b like M_6 gives M_8", closed is not None and are_isomorphic(closed.host, m8))
    if 5 in girths:
        for name in ("5a", "5b"):
            try:
                e = cat.entry(name)
            except KeyError:
                add(f"{name} yields no B", False, "configuration not named")
                continue
            add(f"{name} yields no B", not e.B,
                f"{[(b.graph.n, b.type) for b in e.B]}")
        try:
            e = cat.entry("5c")
            add("B_5c is type (ii)", bool(e.B) and all(b.type == "ii" for b in e.B),
                f"{[(b.graph.n, b.type) for b in e.B]}")
        except KeyError:
            add("B_5c is type (ii)", False, "configuration not named")
    if 6 in girths:
        hw = heawood()
        type_i = [(e.name, b) for e in cat.by_girth(6) for b in e.B if b.type == "i"]
        add("Heawood is the unique type-(i) B_6",
            len(type_i) == 1 and are_isomorphic(type_i[0][1].graph, hw),
            f"type (i): {[(n, b.graph.n) for n, b in type_i]}")
        e6 = [e for e in cat.by_girth(6) if e.seed.has_complete_cycle()]
        add("exactly one girth-6 configuration holds a complete hexagon", len(e6) == 1)
        if e6:
            e = e6[0]
            add("(6,e) yields exactly two B instances", len(e.B) == 2,
                f"{[(b.graph.n, b.type) for b in e.B]}")
            ok = True
            for b in e.B:
                d = build_cycle_adjacency_graph(b.graph, b.cdc)
                ok = ok and d.is_regular(6) and triangle_correspondence(b.graph, b.cdc)
                ok = ok and hexagons_in_cdc(b.graph, b.cdc)
            add("B_6e cycle adjacency graphs are 6-regular with vertex triangles", ok and bool(e.B))
        add("every girth-6 base graph has all sigma = 6",
            all(build_cycle_adjacency_graph(b.graph, b.cdc).is_regular(6) for e in cat.by_girth(6) for b in e.B))
    return out

# ---------------------------------------------------------------------------
# catalog file
# ---------------------------------------------------------------------------

HEADER = "hexcover-catalog v1"


class CatalogFormatError(ValueError):
    pass


def _paths_text(paths: Sequence[Path] | None) -> str:
    if paths is None:
        return "none"
    return " ; ".join(" ".join(map(str, p)) for p in paths)


def _parse_paths(text: str) -> tuple[Path, ...] | None:
    if text == "none":
        return None
    if not text:
        return ()
    return tuple(tuple(int(v) for v in part.split()) for part in text.split(" ; "))


def _outcome_text(o: SearchOutcome) -> str:
    return f"bound {o.bound} nodes {o.nodes} reached {'yes' if o.bound_reached else 'no'}"


def _parse_outcome(parts: list[str]) -> SearchOutcome:
    d = dict(zip(parts[::2], parts[1::2]))
    return SearchOutcome(int(d["bound"]), int(d["nodes"]), d["reached"] == "yes")


def _block(tag: str, body: str) -> list[str]:
    return [tag, *body.rstrip("\n").split("\n"), "end"]


def format_catalog(cat: SeedCatalog) -> str:
    from .cdc import format_cdc
    from .config import format_config
    from .graph6 import encode_graph6

    out = [HEADER]
    for e in cat.entries:
        out.append(f"entry {e.name} girth {e.girth} config {e.index} redundant {e.redundant}")
        out.extend(_block("seed", format_config(e.seed)))
        if e.degenerate is not None:
            d = e.degenerate
            merged = "none" if d.merged is None else f"{d.merged[0]} {d.merged[1]}"
            pend = " ".join(f"{a} {b}" for a, b in d.pendants)
            out.append(f"degenerate pendants {pend} merged {merged}")
        out.append("search I " + _outcome_text(e.i_search))
        out.append("search B " + _outcome_text(e.b_search))
        if e.I is None:
            out.append("I none")
        else:
            out.append(f"I {encode_graph6(e.I.graph).decode()} alternatives {e.I.alternatives}")
            out.extend(_block("config", format_config(e.I.config)))
            c = e.I.correspondence
            out.append("vertices " + " ".join(f"{a}:{b}" for a, b in c.vertex_map))
            out.append("labels " + " ".join(f"{a}:{b}" for a, b in c.label_map))
        for k, b in enumerate(e.B):
            out.append(
                f"B {k} {encode_graph6(b.graph).decode()} type {b.type} "
                f"degenerate {'yes' if b.degenerate else 'no'}"
            )
            out.extend(_block("cdc", format_cdc(b.graph, b.cdc)))
            out.append("embedding " + " ".join(map(str, b.embedding)))
            out.append("hamiltonian " + " ".join(map(str, b.hamiltonian)))
            out.append("trace " + _paths_text(b.trace))
            out.append("ipaths " + _paths_text(b.i_paths))
        out.append("end entry")
    for a in cat.anchors:
        out.append(f"anchor {'pass' if a.passed else 'FAIL'} {a.name}")
    return "\n".join(out) + "\n"


def parse_catalog(text: str) -> SeedCatalog:
    from .cdc import parse_cdc
    from .config import parse_config
    from .graph6 import decode_graph6

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise CatalogFormatError("missing catalog header")
    pos = 1

    def take_block(tag: str) -> str:
        nonlocal pos
        if lines[pos] != tag:
            raise CatalogFormatError(f"expected {tag!r} at line {pos + 1}")
        end = lines.index("end", pos)
        body = "\n".join(lines[pos + 1:end]) + "\n"
        pos = end + 1
        return body

    def field_(prefix: str) -> str:
        nonlocal pos
        line = lines[pos]
        if line != prefix and not line.startswith(prefix + " "):
            raise CatalogFormatError(f"expected {prefix!r} at line {pos + 1}")
        pos += 1
        return line[len(prefix) + 1:]

    entries: list[SeedCatalogEntry] = []
    anchors: list[Anchor] = []
    try:
        while pos < len(lines):
            line = lines[pos]
            if line.startswith("anchor "):
                _, status, name = line.split(" ", 2)
                anchors.append(Anchor(name, status == "pass", ""))
                pos += 1
                continue
            head = field_("entry").split()
            name, g, idx, redundant = head[0], int(head[2]), int(head[4]), int(head[6])
            seed = parse_config(take_block("seed"))
            deg = None
            if lines[pos].startswith("degenerate "):
                parts = field_("degenerate").split()
                mi = parts.index("merged")
                nums = list(map(int, parts[1:mi]))
                pend = tuple(zip(nums[::2], nums[1::2]))
                merged = None if parts[mi + 1] == "none" else (int(parts[mi + 1]), int(parts[mi + 2]))
                res = identify_boundary(seed, list(pend), merged, g)
                if res is None:
                    raise CatalogFormatError("degenerate identification does not close up")
                deg = DegenerateSeed(idx, pend, merged, res)
            i_out = _parse_outcome(field_("search I").split())
            b_out = _parse_outcome(field_("search B").split())
            inst = None
            i_line = field_("I")
            if i_line != "none":
                code, _, alt = i_line.split()
                cfg = parse_config(take_block("config"))
                if cfg.host != decode_graph6(code):
                    raise CatalogFormatError(f"I graph of {name} disagrees with its configuration")
                vm = tuple(tuple(map(int, x.split(":"))) for x in field_("vertices").split())
                lm = tuple(tuple(map(int, x.split(":"))) for x in field_("labels").split())
                corr = configs_equivalent(cfg, seed)
                if corr is None or corr.vertex_map != vm or corr.label_map != lm:
                    raise CatalogFormatError(f"I correspondence of {name} does not check")
                inst = IInstance(cfg, corr, int(alt))
            bs: list[BInstance] = []
            while lines[pos].startswith("B "):
                parts = field_("B").split()
                graph = decode_graph6(parts[1])
                _, cdc = parse_cdc(take_block("cdc"))
                emb = tuple(map(int, field_("embedding").split()))
                ham = tuple(map(int, field_("hamiltonian").split()))
                tr = _parse_paths(field_("trace")) or ()
                ip = _parse_paths(field_("ipaths"))
                bs.append(BInstance(graph, cdc, parts[3], emb, ham, tr, ip, parts[5] == "yes"))
            if lines[pos] != "end entry":
                raise CatalogFormatError(f"expected 'end entry' at line {pos + 1}")
            pos += 1
            entries.append(SeedCatalogEntry(g, idx, name, seed, inst, bs, i_out, b_out, redundant, deg))
    except (IndexError, ValueError, KeyError) as exc:
        if isinstance(exc, CatalogFormatError):
            raise
        raise CatalogFormatError(f"malformed catalog near line {pos + 1}: {exc}") from exc
    return SeedCatalog(entries, anchors)


def write_catalog(cat: SeedCatalog, path) -> None:
    from pathlib import Path as FsPath

    FsPath(path).write_text(format_catalog(cat))


def load_catalog(path, rebuild: bool = True) -> SeedCatalog:
    """Read a catalog file. A missing or unreadable file is rebuilt when
    ``rebuild`` is set; a corrupt one is first moved aside to ``*.bak``."""
    from pathlib import Path as FsPath

    p = FsPath(path)
    if p.exists():
        try:
            return parse_catalog(p.read_text())
        except (CatalogFormatError, UnicodeDecodeError) as exc:
            if not rebuild:
                raise
            log.warning("catalog %s unreadable (%s); rebuilding", p, exc)
            p.replace(p.with_name(p.name + ".bak"))
    elif not rebuild:
        raise FileNotFoundError(p)
    cat = build_catalog()
    write_catalog(cat, p)
    return cat

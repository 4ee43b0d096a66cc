"""Growth of base graphs by substituting I_g for seed copies, and the
reverse reduction back to a base graph."""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .canon import canonical_form
from .cdc import CDC, check_structure_theorems, find_6cdc, verify_6cdc
from .config import CycleConfiguration, config_certificate, configs_equivalent, equivalences, restrict
from .embed import find_subgraph_embeddings
from .graph import Graph, enumerate_cycles, girth
from . import kernels
from .hamilton import Path, hamiltonian_cycle, is_hamiltonian_cycle, path_system, splice_cycle, trace
from .seeds import SeedCatalog, SeedCatalogEntry, hexagons_in_cdc
from .splice import cdc_from_labeling, labeling_from_cdc, splice, splice_with

log = logging.getLogger(__name__)

Edge = tuple[int, int]


# Hamiltonian cycles of a host tried when its own cycle cannot be spliced
HOST_CYCLE_LIMIT = 5000


class SubstitutionError(RuntimeError):
    pass


def encode_edges(g: Graph) -> bytes:
    return repr(g.edges()).encode()


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    cdc: CDC
    hamiltonian: tuple[int, ...]
    # base instance label, then one entry name per substitution
    provenance: tuple[str, ...]
    certificate: bytes
    # True when the cycle came out of the splice rather than a fresh search
    spliced: bool = True

    @property
    def n(self) -> int:
        return self.graph.n

    def configuration(self) -> CycleConfiguration:
        return CycleConfiguration.of(self.graph, labeling_from_cdc(self.graph, self.cdc))


@dataclass(frozen=True)
class Site:
    """A seed copy in a host: ``emb`` maps seed vertices to host vertices
    (pendants may coincide) and ``vmap``/``lmap`` send I's boundary vertices
    and labels to seed vertices and host labels."""

    entry: SeedCatalogEntry
    emb: tuple[int, ...]
    vmap: dict[int, int]
    lmap: dict[int, int]


def seed_copies(host: Graph, g: int) -> list[tuple[int, ...]]:
    """One embedding per g-cycle: the cycle followed by each cycle vertex's
    third neighbour. Third neighbours may coincide."""
    out = []
    for cyc in enumerate_cycles(host, g):
        on = set(cyc)
        pend = []
        for i, v in enumerate(cyc):
            rest = [w for w in host.adj[v] if w not in (cyc[i - 1], cyc[(i + 1) % g])]
            if len(rest) != 1 or rest[0] in on:
                break
            pend.append(rest[0])
        else:
            out.append(tuple(cyc) + tuple(pend))
    return out


def _orientations(emb: Sequence[int], g: int) -> Iterable[tuple[int, ...]]:
    cyc, pend = list(emb[:g]), list(emb[g:])
    for flip in (False, True):
        c, p = (cyc[::-1], pend[::-1]) if flip else (cyc, pend)
        for r in range(g):
            yield tuple(c[r:] + c[:r] + p[r:] + p[:r])


def _literal_label_map(seed: CycleConfiguration, lab: dict[Edge, tuple[int, int]], emb) -> dict[int, int] | None:
    """A map from seed labels to host labels carrying the seed's labeling onto
    the copy edge by edge, if one exists (it may merge labels)."""
    sigma: dict[int, int] = {}

    def rec(i: int) -> bool:
        if i == len(seed.pairs):
            return True
        (u, v), (a, b) = seed.pairs[i]
        e = (emb[u], emb[v]) if emb[u] < emb[v] else (emb[v], emb[u])
        x, y = lab[e]
        for p, q in ((x, y), (y, x)):
            saved = dict(sigma)
            if sigma.setdefault(a, p) == p and sigma.setdefault(b, q) == q and rec(i + 1):
                return True
            sigma.clear()
            sigma.update(saved)
        return False

    return dict(sigma) if rec(0) else None


class Engine:
    """Substitution machinery for one girth over a catalog."""

    def __init__(self, catalog: SeedCatalog, g: int):
        self.g = g
        self.entries = [e for e in catalog.by_girth(g)]
        self.active = [e for e in self.entries if e.I is not None]
        self._paths: dict[tuple[str, tuple], list[Path] | None] = {}
        self.fallbacks = 0
        self.reselected = 0
        self._cycles: dict[bytes, list[tuple[int, ...]]] = {}
        self.multiplicity: list[tuple[bytes, list[str]]] = []

    # -- sites ---------------------------------------------------------------

    def classify_copy(self, cfg: CycleConfiguration, emb) -> list[SeedCatalogEntry]:
        """Entries whose seed configuration the copy carries."""
        pattern = self.entries[0].seed.host
        if len(set(emb)) < len(emb):
            lab = cfg.labeling()
            return [e for e in self.entries if any(_literal_label_map(e.seed, lab, o) for o in _orientations(emb, self.g))]
        sub = restrict(cfg, pattern, emb)
        return [e for e in self.entries if configs_equivalent(e.seed, sub) is not None]

    def sites(self, cfg: CycleConfiguration) -> list[Site]:
        out = []
        lab = cfg.labeling()
        pattern = self.entries[0].seed.host if self.entries else None
        for emb in seed_copies(cfg.host, self.g):
            if len(set(emb)) == len(emb):
                sub = restrict(cfg, pattern, emb)
                for e in self.active:
                    if self.g == 6 and not e.seed.has_complete_cycle() and sub.has_complete_cycle():
                        continue
                    # distinct correspondences can glue I in differently
                    for corr in equivalences(e.I.config, sub):
                        out.append(Site(e, emb, corr.vmap(), corr.lmap()))
            else:
                for e in self.active:
                    out.extend(self._degenerate_sites(e, lab, emb))
        return out

    def _degenerate_sites(self, e: SeedCatalogEntry, lab, emb) -> list[Site]:
        corr = e.I.correspondence
        out = []
        for o in _orientations(emb, self.g):
            sigma = _literal_label_map(e.seed, lab, o)
            if sigma is not None:
                out.append(Site(e, o, corr.vmap(), {x: sigma[s] for x, s in corr.label_map}))
        return out

    # -- substitution ----------------------------------------------------------

    def _i_paths(self, e: SeedCatalogEntry, pairs: tuple) -> list[Path] | None:
        key = (e.name, pairs)
        if key not in self._paths:
            self._paths[key] = path_system(e.I.graph, list(pairs))
        return self._paths[key]

    def substitute(self, host: GeneratedGraph, site: Site) -> GeneratedGraph | None:
        """Replace the seed copy by I. None when the result is not simple, not
        of girth g, or its labeling is not a valid 6-CDC."""
        e = site.entry
        lab = labeling_from_cdc(host.graph, host.cdc)
        res = splice_with(host.graph, lab, e.seed, site.emb, e.I.config, site.vmap, site.lmap)
        if res is None or not res.graph.is_cubic() or girth(res.graph) != self.g:
            return None
        try:
            cdc = cdc_from_labeling(res.graph, res.labeling)
        except ValueError:
            return None
        if not verify_6cdc(res.graph, cdc.cycles).ok:
            return None
        cyc = self._splice_ham(host.hamiltonian, site, res)
        spliced = cyc is not None
        if cyc is None:
            # another Hamiltonian cycle of the host may cross the copy in a
            # way I can reproduce
            for alt in self._host_cycles(host):
                cyc = self._splice_ham(alt, site, res)
                if cyc is not None:
                    self.reselected += 1
                    spliced = True
                    break
        if cyc is None:
            self.fallbacks += 1
            cyc = hamiltonian_cycle(res.graph)
            if cyc is None:
                raise SubstitutionError("substituted graph has no Hamiltonian cycle")
        return GeneratedGraph(
            res.graph, cdc.renumbered(), tuple(cyc), host.provenance + (e.name,), canonical_form(res.graph), spliced
        )

    def _host_cycles(self, host: GeneratedGraph) -> list[tuple[int, ...]]:
        key = host.certificate + encode_edges(host.graph)
        if key not in self._cycles:
            adj = [list(a) for a in host.graph.adj]
            self._cycles[key] = [tuple(c) for c in kernels.ham_cycles(adj, HOST_CYCLE_LIMIT)]
        return self._cycles[key]

    def _splice_ham(self, cycle: Sequence[int], site: Site, res) -> tuple[int, ...] | None:
        e = site.entry
        pieces = trace(cycle, e.seed.host, site.emb)
        to_i = {s: r for r, s in site.vmap.items()}
        pairs = tuple((to_i[p[0]], to_i[p[-1]]) for p in pieces)
        paths = self._i_paths(e, pairs)
        if paths is None:
            return None
        out = splice_cycle(cycle, res.old_to_new, paths, res.repl_to_new)
        return out if is_hamiltonian_cycle(res.graph, out) else None

    def children(self, host: GeneratedGraph) -> list[GeneratedGraph]:
        out = []
        for site in self.sites(host.configuration()):
            child = self.substitute(host, site)
            if child is not None:
                out.append(child)
        return out

    # -- checks ------------------------------------------------------------------

    def copy_classes(self, gg: GeneratedGraph) -> list[str]:
        """Names of the seed configurations carried by the graph's seed copies
        (copies holding a complete hexagon are left out for girth 6)."""
        cfg = gg.configuration()
        names: set[str] = set()
        pattern = self.entries[0].seed.host
        for emb in seed_copies(gg.graph, self.g):
            if self.g == 6 and len(set(emb)) == len(emb) and restrict(cfg, pattern, emb).has_complete_cycle():
                continue
            names.update(e.name for e in self.classify_copy(cfg, emb))
        return sorted(names)


def start_points(catalog: SeedCatalog, g: int, n_max: int) -> list[GeneratedGraph]:
    """Every base instance with every one of its 6-CDCs."""
    out = []
    for e in catalog.by_girth(g):
        for k, b in enumerate(e.B):
            if b.graph.n > n_max:
                continue
            tag = f"B_{e.name}[{k}]"
            cdcs = find_6cdc(b.graph, "all")
            for c in cdcs:
                cyc = b.hamiltonian
                out.append(GeneratedGraph(b.graph, c.renumbered(), cyc, (tag,), canonical_form(b.graph), False))
    return out


@dataclass
class GenerationReport:
    girth: int
    n_max: int
    states: int = 0
    # splices needing another host cycle, and substitutions with no splice
    reselected: int = 0
    fallbacks: int = 0
    # graphs whose seed copies carry more than one seed configuration
    multiplicity: list[tuple[str, list[str]]] = field(default_factory=list)
    theorem_failures: list[tuple[str, dict]] = field(default_factory=list)


def generate(
    catalog: SeedCatalog, g: int, n_max: int, report: GenerationReport | None = None
) -> list[GeneratedGraph]:
    """All graphs reachable from the girth-g bases by substitution, up to
    n_max vertices, one per isomorphism class, ordered by (n, certificate).

    States are configured graphs, so one graph reached with two different
    covers is explored under both; only the first cover found is output.
    """
    from .graph6 import encode_graph6

    eng = Engine(catalog, g)
    rep = report if report is not None else GenerationReport(g, n_max)
    heap: list[tuple[int, bytes, int]] = []
    states: dict[bytes, GeneratedGraph] = {}
    order = 0

    def push(gg: GeneratedGraph) -> None:
        nonlocal order
        key = config_certificate(gg.configuration())
        if key in states:
            return
        states[key] = gg
        heapq.heappush(heap, (gg.n, key, order))
        order += 1

    for s in start_points(catalog, g, n_max):
        push(s)
    best: dict[bytes, GeneratedGraph] = {}
    while heap:
        _, key, _ = heapq.heappop(heap)
        gg = states[key]
        if gg.certificate not in best:
            best[gg.certificate] = gg
        for child in eng.children(gg):
            if child.n <= n_max:
                push(child)
    rep.states = len(states)
    rep.fallbacks = eng.fallbacks
    rep.reselected = eng.reselected
    out = sorted(best.values(), key=lambda x: (x.n, x.certificate))
    for gg in out:
        if not is_hamiltonian_cycle(gg.graph, gg.hamiltonian):
            raise SubstitutionError("stored Hamiltonian cycle is invalid")
        th = check_structure_theorems(gg.graph, gg.cdc)
        if not th.ok:
            rep.theorem_failures.append((encode_graph6(gg.graph).decode(), th.checks))
        classes = eng.copy_classes(gg)
        if len(classes) > 1:
            rep.multiplicity.append((encode_graph6(gg.graph).decode(), classes))
    return out


# ---------------------------------------------------------------------------
# reverse reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Reduction:
    base: str | None  # catalog label of the terminal graph, None if not a base
    graph: Graph
    cdc: CDC
    steps: tuple[str, ...]  # entry name per reverse substitution

    @property
    def ok(self) -> bool:
        return self.base is not None


def _reverse_step(g: int, cfg: CycleConfiguration, entries) -> tuple[CycleConfiguration, str] | None:
    for e in entries:
        inst = e.I
        seen: set[frozenset] = set()
        for emb in find_subgraph_embeddings(cfg.host, inst.graph):
            key = frozenset(emb[v] for v in range(inst.graph.n) if inst.graph.degree(v) > 1)
            if key in seen:
                continue
            seen.add(key)
            res = splice(cfg.host, cfg.labeling(), inst.config, emb, e.seed)
            if res is None or not res.graph.is_cubic() or girth(res.graph) != g:
                continue
            try:
                cdc = cdc_from_labeling(res.graph, res.labeling)
            except ValueError:
                continue
            if not verify_6cdc(res.graph, cdc.cycles).ok:
                continue
            if e.seed.has_complete_cycle() and not hexagons_in_cdc(res.graph, cdc):
                continue
            return CycleConfiguration.of(res.graph, res.labeling), e.name
    return None


def base_index(catalog: SeedCatalog, g: int) -> dict[bytes, str]:
    out: dict[bytes, str] = {}
    for e in catalog.by_girth(g):
        for k, b in enumerate(e.B):
            out.setdefault(canonical_form(b.graph), f"B_{e.name}[{k}]")
    return out


def reduce_to_base(catalog: SeedCatalog, graph: Graph, cdc: CDC) -> Reduction:
    """Replace I copies by the seed while the graph keeps its girth and a
    valid cover (and, for the complete-hexagon seed, no hexagon falls outside
    the cover). The terminal graph is looked up among the base instances."""
    g = int(girth(graph))
    entries = [e for e in catalog.by_girth(g) if e.I is not None]
    cfg = CycleConfiguration.of(graph, labeling_from_cdc(graph, cdc))
    steps: list[str] = []
    while True:
        nxt = _reverse_step(g, cfg, entries)
        if nxt is None:
            break
        cfg, name = nxt
        steps.append(name)
    bases = base_index(catalog, g)
    final = cfg.host
    tag = bases.get(canonical_form(final))
    return Reduction(tag, final, cdc_from_labeling(final, cfg.labeling()), tuple(steps))


def replay(catalog: SeedCatalog, red: Reduction, target: Graph) -> bool:
    """Check that substituting forward from the terminal base, one entry per
    recorded step in reverse order, can rebuild a graph isomorphic to target."""
    if red.base is None:
        return False
    g = int(girth(target))
    eng = Engine(catalog, g)
    cyc = hamiltonian_cycle(red.graph)
    if cyc is None:
        return False
    goal = canonical_form(target)
    frontier = [GeneratedGraph(red.graph, red.cdc, cyc, (red.base,), canonical_form(red.graph), False)]
    for name in reversed(red.steps):
        nxt: dict[bytes, GeneratedGraph] = {}
        for host in frontier:
            for site in eng.sites(host.configuration()):
                if site.entry.name != name:
                    continue
                child = eng.substitute(host, site)
                if child is not None:
                    nxt.setdefault(config_certificate(child.configuration()), child)
        frontier = list(nxt.values())
        if not frontier:
            return False
    return any(h.certificate == goal for h in frontier)

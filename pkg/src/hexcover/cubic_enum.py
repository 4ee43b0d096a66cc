"""Exhaustive enumeration of connected cubic graphs up to isomorphism.

Two independent strategies are provided so they can check each other:

``insertion``
    Grow from K_4 by local moves: subdivide two distinct edges and join the
    new vertices, replace a vertex by a triangle, replace an edge by a
    diamond (K_4 minus an edge) hung between its ends, or subdivide an edge
    and hang a diamond-plus-apex block from the new vertex. Results are
    merged by canonical certificate at every size.
``pairing``
    Valid for n <= 14, where every connected cubic graph has a perfect
    matching: place a 2-factor on consecutive vertex blocks and add every
    perfect matching avoiding its edges, then merge by certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .canon import canonical_labeling
from .graph import Graph, build_graph, is_connected
from .graph6 import decode_graph6, encode_graph6

MAX_N = 16


@dataclass(frozen=True)
class Corpus:
    n: int
    graphs: tuple[Graph, ...]
    certificates: tuple[bytes, ...]

    def __len__(self) -> int:
        return len(self.graphs)


def _check_n(n: int) -> None:
    if n % 2:
        raise ValueError(f"cubic graphs need an even vertex count, got {n}")
    if not 4 <= n <= MAX_N:
        raise ValueError(f"supported range is 4 <= n <= {MAX_N}, got {n}")


def _corpus(n: int, found: dict[bytes, Graph]) -> Corpus:
    certs = tuple(sorted(found))
    # store every graph in its canonical labeling so output is order-free
    graphs = []
    for c in certs:
        g = found[c]
        _, lab = canonical_labeling(g)
        graphs.append(g.relabel(lab))
    return Corpus(n, tuple(graphs), certs)


def _insert_edge(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> Graph:
    x, y = g.n, g.n + 1
    edges = [e for e in g.edges() if e != e1 and e != e2]
    edges += [(e1[0], x), (x, e1[1]), (e2[0], y), (y, e2[1]), (x, y)]
    return build_graph(g.n + 2, edges)


def _expand_vertex(g: Graph, v: int) -> Graph:
    # v keeps its first neighbour; the other two move to new vertices x, y
    a, b, c = g.adj[v]
    x, y = g.n, g.n + 1
    edges = [e for e in g.edges() if v not in e or a in e]
    edges += [(b, x), (c, y), (v, x), (v, y), (x, y)]
    return build_graph(g.n + 2, edges)


def _insert_diamond(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    a, b, c, d = range(g.n, g.n + 4)
    edges = [f for f in g.edges() if f != e]
    edges += [(u, a), (a, b), (a, c), (b, c), (b, d), (c, d), (d, v)]
    return build_graph(g.n + 4, edges)


def _hang_block(g: Graph, e: tuple[int, int]) -> Graph:
    # subdivide e by x and hang a diamond-plus-apex block (apex w) from x
    u, v = e
    x, w, a, b, c, d = range(g.n, g.n + 6)
    edges = [f for f in g.edges() if f != e]
    edges += [(u, x), (x, v), (x, w), (w, a), (w, d), (a, b), (a, c), (b, c), (b, d), (c, d)]
    return build_graph(g.n + 6, edges)


@lru_cache(maxsize=None)
def _by_insertion(n: int) -> Corpus:
    if n == 4:
        k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        return _corpus(4, {canonical_labeling(k4)[0]: k4})
    found: dict[bytes, Graph] = {}

    def add(h: Graph) -> None:
        cert = canonical_labeling(h)[0]
        if cert not in found:
            found[cert] = h

    for g in _by_insertion(n - 2).graphs:
        es = g.edges()
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                add(_insert_edge(g, es[i], es[j]))
        for v in range(g.n):
            add(_expand_vertex(g, v))
    if n >= 8:
        for g in _by_insertion(n - 4).graphs:
            for e in g.edges():
                add(_insert_diamond(g, e))
    if n >= 10:
        for g in _by_insertion(n - 6).graphs:
            for e in g.edges():
                add(_hang_block(g, e))
    return _corpus(n, found)


def _partitions(n: int, smallest: int = 3) -> list[list[int]]:
    """Partitions of n into parts >= 3, parts non-increasing."""
    out = []

    def rec(rest: int, cap: int, acc: list[int]) -> None:
        if rest == 0:
            out.append(list(acc))
            return
        for p in range(min(rest, cap), smallest - 1, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out


def _by_pairing(n: int) -> Corpus:
    if n > 14:
        raise ValueError("the pairing strategy is only complete for n <= 14")
    found: dict[bytes, Graph] = {}
    for parts in _partitions(n):
        cyc_edges = set()
        start = 0
        block_of = []
        for b, p in enumerate(parts):
            for i in range(p):
                u, v = start + i, start + (i + 1) % p
                cyc_edges.add((min(u, v), max(u, v)))
                block_of.append(b)
            start += p
        # vertex 0 may be assumed matched to: a vertex of its own cycle at
        # distance 2..p/2 (rotation + reflection), or the first vertex of the
        # first cycle of each other length (rotation + block permutation).
        first_choices = [d for d in range(2, parts[0] // 2 + 1)]
        start = parts[0]
        seen_len = set()
        for b in range(1, len(parts)):
            if parts[b] not in seen_len:
                seen_len.add(parts[b])
                first_choices.append(start)
            start += parts[b]
        for partner in first_choices:
            free = [v for v in range(1, n) if v != partner]
            matching = [(0, partner)]

            def rec(free: list[int]) -> None:
                if not free:
                    g = build_graph(n, sorted(cyc_edges) + matching)
                    if is_connected(g):
                        cert = canonical_labeling(g)[0]
                        if cert not in found:
                            found[cert] = g
                    return
                u = free[0]
                for k in range(1, len(free)):
                    v = free[k]
                    if (u, v) in cyc_edges:
                        continue
                    matching.append((u, v))
                    rec(free[1:k] + free[k + 1:])
                    matching.pop()

            rec(free)
    return _corpus(n, found)


def enumerate_cubic(n: int, strategy: str = "insertion") -> Corpus:
    """All connected cubic graphs on n vertices, one per isomorphism class,
    each in canonical labeling and sorted by certificate."""
    _check_n(n)
    if strategy == "insertion":
        return _by_insertion(n)
    if strategy == "pairing":
        return _by_pairing(n)
    raise ValueError(f"unknown strategy {strategy!r}")


def write_corpus_cache(corpus: Corpus, path: Path) -> None:
    path.write_bytes(b"".join(encode_graph6(g) + b"\n" for g in corpus.graphs))


def read_corpus_cache(n: int, path: Path) -> Corpus | None:
    """Load a cache file; returns None if it is unreadable or inconsistent."""
    try:
        lines = path.read_bytes().split(b"\n")
    except OSError:
        return None
    if lines and lines[-1] == b"":
        lines.pop()
    found = {}
    try:
        for line in lines:
            g = decode_graph6(line)
            if g.n != n or not g.is_cubic() or not is_connected(g):
                return None
            found[canonical_labeling(g)[0]] = g
    except ValueError:
        return None
    if len(found) != len(lines):
        return None
    return _corpus(n, found)


def load_corpus(n: int, cache_dir: Path | None = None) -> Corpus:
    _check_n(n)
    if cache_dir is not None:
        path = Path(cache_dir) / f"cubic-{n}.g6"
        cached = read_corpus_cache(n, path)
        if cached is not None:
            return cached
        corpus = enumerate_cubic(n)
        path.parent.mkdir(parents=True, exist_ok=True)
        write_corpus_cache(corpus, path)
        return corpus
    return enumerate_cubic(n)


@dataclass
class CrosscheckRow:
    n: int
    corpus: int
    positive: dict[int, int]  # girth -> oracle-positive graphs
    generated: dict[int, int]  # girth -> generated graphs
    missed: list[bytes]  # positive but not generated (graph6)
    extra: list[bytes]  # generated but not positive
    non_hamiltonian: list[bytes]

    @property
    def ok(self) -> bool:
        return not (self.missed or self.extra or self.non_hamiltonian)


@dataclass
class CrosscheckReport:
    n_max: int
    rows: list[CrosscheckRow]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def table(self) -> list[str]:
        out = []
        for r in self.rows:
            pos = " ".join(f"g{g}:{k}" for g, k in sorted(r.positive.items())) or "-"
            gen = " ".join(f"g{g}:{k}" for g, k in sorted(r.generated.items())) or "-"
            out.append(
                f"n={r.n:<3} corpus {r.corpus:<4} positive {pos:<16} generated {gen:<16} "
                f"missed {len(r.missed)} extra {len(r.extra)} non-hamiltonian {len(r.non_hamiltonian)}"
                f"  {'pass' if r.ok else 'FAIL'}"
            )
        return out


def crosscheck(n_max: int, catalog, cache_dir: Path | None = None) -> CrosscheckReport:
    """Compare oracle-positive corpus graphs with the generator's output, per
    vertex count and girth, by canonical certificate."""
    from .cdc import find_6cdc
    from .generator import generate
    from .graph import girth
    from .hamilton import hamiltonian_cycle

    if n_max > MAX_N:
        raise ValueError(f"n_max must be at most {MAX_N}")
    streams: dict[int, dict[bytes, object]] = {}
    for g in (3, 4, 5, 6):
        streams[g] = {x.certificate: x for x in generate(catalog, g, n_max)}
    rows = []
    for n in range(4, n_max + 1, 2):
        corpus = load_corpus(n, cache_dir)
        positive: dict[int, set[bytes]] = {}
        non_ham = []
        for g, cert in zip(corpus.graphs, corpus.certificates):
            if find_6cdc(g, "first"):
                positive.setdefault(int(girth(g)), set()).add(cert)
                if hamiltonian_cycle(g) is None:
                    non_ham.append(encode_graph6(g))
        generated: dict[int, set[bytes]] = {}
        for gi, stream in streams.items():
            hit = {c for c, x in stream.items() if x.n == n}
            if hit:
                generated[gi] = hit
        missed, extra = [], []
        by_cert = dict(zip(corpus.certificates, corpus.graphs))
        for gi in sorted(set(positive) | set(generated)):
            p, q = positive.get(gi, set()), generated.get(gi, set())
            missed.extend(encode_graph6(by_cert[c]) for c in sorted(p - q))
            extra.extend(encode_graph6(streams[gi][c].graph) for c in sorted(q - p))
        rows.append(
            CrosscheckRow(
                n, len(corpus),
                {g: len(s) for g, s in positive.items()},
                {g: len(s) for g, s in generated.items()},
                missed, extra, non_ham,
            )
        )
    return CrosscheckReport(n_max, rows)

"""Depth-first expansion of a configured graph.

Starting from a seed configuration, the open fragment of the smallest label
is extended one edge at a time, either to an existing deficient vertex or to
a new one, keeping every local 6-CDC rule and the girth. Two goals use it:

* cubic completions, where every label closes into a hexagon;
* bounded expansions, where some degree-1 vertices are declared final
  ("frozen") and fragments ending there stay open.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Callable

from .config import CycleConfiguration
from .graph import build_graph

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SearchBoundExceeded(RuntimeError):
    """Raised when a search was cut by its vertex bound and the caller asked
    to be told."""


@dataclass
class ExpansionStats:
    nodes: int = 0
    leaves: int = 0
    cut_by_bound: int = 0


class Expander:
    def __init__(
        self,
        start: CycleConfiguration,
        girth: int,
        max_vertices: int,
        distinct_pairs: bool = False,
        hexagons_covered: bool = False,
        open_lengths: frozenset[int] = frozenset(),
    ):
        g = start.host
        # girth 6 forces mu <= 1, so no label pair may repeat
        self.distinct_pairs = distinct_pairs
        # every hexagon of the graph must be one of the labels' cycles
        self.hexagons_covered = hexagons_covered
        # lengths a fragment between two frozen vertices may have
        self.open_lengths = open_lengths
        self.g = girth
        self.max_n = max_vertices
        self.n = g.n
        self.adj: list[list[int]] = [list(a) for a in g.adj]
        self.pair: dict[Edge, tuple[int, int]] = dict(start.pairs)
        self.pcount: Counter = Counter(self.pair.values())
        self.ledges: dict[int, list[Edge]] = {}
        self.ldeg: dict[tuple[int, int], int] = {}
        for e, p in self.pair.items():
            for x in p:
                self._attach(e, x)
        self.next_label = max(self.ledges) + 1 if self.ledges else 0
        self.frozen: set[int] = set()
        self.stats = ExpansionStats()

    # -- bookkeeping -------------------------------------------------------

    def _attach(self, e: Edge, x: int) -> None:
        self.ledges.setdefault(x, []).append(e)
        for v in e:
            self.ldeg[(v, x)] = self.ldeg.get((v, x), 0) + 1

    def _detach(self, e: Edge, x: int) -> None:
        self.ledges[x].pop()
        if not self.ledges[x]:
            del self.ledges[x]
        for v in e:
            k = self.ldeg[(v, x)] - 1
            if k:
                self.ldeg[(v, x)] = k
            else:
                del self.ldeg[(v, x)]

    def _add_edge(self, u: int, w: int, a: int, b: int) -> None:
        e = _edge(u, w)
        self.adj[u].append(w)
        self.adj[w].append(u)
        p = self.pair[e] = (a, b) if a < b else (b, a)
        self.pcount[p] += 1
        self._attach(e, a)
        self._attach(e, b)

    def _remove_edge(self, u: int, w: int, a: int, b: int) -> None:
        e = _edge(u, w)
        self._detach(e, b)
        self._detach(e, a)
        self.pcount[self.pair.pop(e)] -= 1
        self.adj[u].pop()
        self.adj[w].pop()

    def ends(self, x: int) -> list[int]:
        vs = {v for e in self.ledges.get(x, ()) for v in e}
        return sorted(v for v in vs if self.ldeg.get((v, x)) == 1)

    def exits(self, v: int) -> list[int]:
        """Labels with an open end at v."""
        ls = {x for w in self.adj[v] for x in self.pair[_edge(v, w)]}
        return sorted(x for x in ls if self.ldeg[(v, x)] == 1)

    def config(self) -> CycleConfiguration:
        host = build_graph(self.n, list(self.pair))
        return CycleConfiguration.of(host, self.pair)

    # -- checks ------------------------------------------------------------

    def _label_ok(self, x: int) -> bool:
        es = self.ledges.get(x)
        if not es:
            return True
        ends = [v for v in {v for e in es for v in e} if self.ldeg[(v, x)] == 1]
        if not ends:
            # closed: a single 6-cycle (label degree is at most 2 everywhere)
            return len(es) == 6 and self._connected(es)
        k = len(ends) // 2
        if len(es) + k > 6:
            return False
        if any(self._closed_component(es, x)):
            return False
        if k == 1 and len(es) == 5:
            u, w = ends
            if w in self.adj[u] or u in self.frozen or w in self.frozen:
                # frozen ends stay open; a lone 5-path between them is fine
                return u in self.frozen and w in self.frozen
        if self.open_lengths and any(v in self.frozen for v in ends):
            return self._frozen_lengths_ok(es, ends)
        return True

    def _frozen_lengths_ok(self, es: list[Edge], ends: list[int]) -> bool:
        # a fragment ending at a frozen vertex keeps its final length
        adj: dict[int, list[int]] = {}
        for u, v in es:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        top = max(self.open_lengths)
        for a in ends:
            prev, cur, length = -1, a, 0
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            fa, fb = a in self.frozen, cur in self.frozen
            if fa and fb and length not in self.open_lengths:
                return False
            if (fa or fb) and length > top:
                return False
        return True

    @staticmethod
    def _connected(es: list[Edge]) -> bool:
        adj: dict[int, list[int]] = {}
        for u, v in es:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        start = es[0][0]
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(adj)

    def _closed_component(self, es: list[Edge], x: int):
        # a label with open ends must not also contain a closed cycle
        adj: dict[int, list[int]] = {}
        for u, v in es:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        seen: set[int] = set()
        for s in adj:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            yield all(len(adj[v]) == 2 for v in comp)

    def _hexagons_ok(self, u: int, w: int) -> bool:
        """Every 6-cycle through the new edge uw keeps a label on all edges."""
        path = [w]

        def walk(a: int, common: set[int]) -> bool:
            if len(path) == 6:
                return bool(common)
            for b in self.adj[a]:
                if b in path or (len(path) < 5) == (b == u):
                    continue
                path.append(b)
                ok = walk(b, common & set(self.pair[_edge(a, b)]))
                path.pop()
                if not ok:
                    return False
            return True

        return walk(w, set(self.pair[_edge(u, w)]))

    def _far_enough(self, u: int, w: int) -> bool:
        """True if joining u and w creates no cycle shorter than the girth."""
        limit = self.g - 2
        if limit <= 0:
            return True
        dist = {u: 0}
        q = deque([u])
        while q:
            a = q.popleft()
            if dist[a] >= limit:
                continue
            for b in self.adj[a]:
                if b not in dist:
                    if b == w:
                        return False
                    dist[b] = dist[a] + 1
                    q.append(b)
        return True

    # -- search ------------------------------------------------------------

    def _pick(self) -> tuple[int, int] | None:
        for x in sorted(self.ledges):
            for v in self.ends(x):
                if v not in self.frozen:
                    return x, v
        return None

    def _moves(self, x: int, v: int):
        """Yield ``(w, y)``: join v to w (``-1`` = new vertex) with pair {x, y}."""
        ex = self.exits(v)
        others = [y for y in ex if y != x]
        if len(self.adj[v]) == 2:
            choices = others  # forced: the other exiting label
        else:
            held = {y for w in self.adj[v] for y in self.pair[_edge(v, w)]}
            live = sorted(y for y in self.ledges if y not in held and self.ends(y))
            choices = live + [None]  # None = a fresh label
        for w in range(self.n):
            if w == v or len(self.adj[w]) >= 3 or w in self.frozen or w in self.adj[v]:
                continue
            wx = self.exits(w)
            for y in choices:
                if y is None:
                    # w must already carry x for the new pair to share one label
                    if len(self.adj[w]) == 2 or x not in wx:
                        continue
                    yield w, y
                    continue
                if len(self.adj[w]) == 2:
                    if sorted((x, y)) != wx:
                        continue
                else:
                    held_w = set(self.pair[_edge(w, self.adj[w][0])])
                    if len(held_w & {x, y}) != 1:
                        continue
                yield w, y
        if self.n < self.max_n:
            for y in choices:
                yield -1, y
        else:
            self.stats.cut_by_bound += 1

    def run(self, on_leaf: Callable[["Expander"], None], freeze: bool = False, max_frozen: int = 0) -> None:
        """Explore every expansion. ``on_leaf`` sees states where no open end
        is left outside the frozen set. With ``freeze`` the seed's degree-1
        vertices and every new vertex may be declared final."""
        if freeze:
            cands = [v for v in range(self.n) if len(self.adj[v]) == 1]
            self._freeze_subsets(cands, 0, max_frozen, on_leaf)
        else:
            self._search(on_leaf, False, 0)

    def _freeze_subsets(self, cands, i, max_frozen, on_leaf):
        if i == len(cands):
            self._search(on_leaf, True, max_frozen)
            return
        self._freeze_subsets(cands, i + 1, max_frozen, on_leaf)
        if len(self.frozen) < max_frozen:
            self.frozen.add(cands[i])
            self._freeze_subsets(cands, i + 1, max_frozen, on_leaf)
            self.frozen.discard(cands[i])

    def _search(self, on_leaf, freeze: bool, max_frozen: int) -> None:
        self.stats.nodes += 1
        pick = self._pick()
        if pick is None:
            self.stats.leaves += 1
            on_leaf(self)
            return
        x, v = pick
        for w, y in list(self._moves(x, v)):
            fresh = y is None
            if fresh:
                y = self.next_label
                self.next_label += 1
            new = w == -1
            if new:
                w = self.n
                self.n += 1
                self.adj.append([])
            elif not self._far_enough(v, w):
                if fresh:
                    self.next_label -= 1
                continue
            self._add_edge(v, w, x, y)
            if self.distinct_pairs and self.pcount[self.pair[_edge(v, w)]] > 1:
                pass
            elif self.hexagons_covered and not new and not self._hexagons_ok(v, w):
                pass
            else:
                self._step(w, x, y, new, freeze, max_frozen, on_leaf)
            self._remove_edge(v, w, x, y)
            if new:
                self.adj.pop()
                self.n -= 1
            if fresh:
                self.next_label -= 1

    def _step(self, w, x, y, new, freeze, max_frozen, on_leaf) -> None:
        if self._label_ok(x) and self._label_ok(y):
            self._search(on_leaf, freeze, max_frozen)
        if new and freeze and len(self.frozen) < max_frozen:
            self.frozen.add(w)
            if self._label_ok(x) and self._label_ok(y):
                self._search(on_leaf, freeze, max_frozen)
            self.frozen.discard(w)

"""6-cycle double covers: validation, intersection statistics, the
exhaustive oracle and the structural-theorem checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels
from .graph import Graph, cycle_edges, enumerate_cycles, girth, is_connected, normalize_cycle

Cycle = tuple[int, ...]


class CdcError(ValueError):
    pass


@dataclass(frozen=True)
class CDC:
    """An unordered collection of normalized 6-cycles over a host graph."""

    cycles: tuple[Cycle, ...]

    @classmethod
    def of(cls, cycles: Iterable[Sequence[int]]) -> "CDC":
        return cls(tuple(sorted(normalize_cycle(tuple(c)) for c in cycles)))

    def __len__(self) -> int:
        return len(self.cycles)

    def edge_cover(self) -> dict[tuple[int, int], list[int]]:
        cover: dict[tuple[int, int], list[int]] = {}
        for i, c in enumerate(self.cycles):
            for e in cycle_edges(c):
                cover.setdefault(e, []).append(i)
        return cover

    def renumbered(self) -> "CDC":
        """Cycles ordered by their least edge (then by vertex sequence)."""
        return CDC(tuple(sorted(self.cycles, key=lambda c: (min(cycle_edges(c)), c))))


@dataclass
class CdcReport:
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)
    mu: list[list[int]] = field(default_factory=list)
    sigma: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def fail(self, name: str, witness: object) -> None:
        self.checks[name] = False
        self.witnesses[name] = witness

    def table(self) -> list[str]:
        lines = []
        for name, passed in self.checks.items():
            line = f"{name:<22}{'pass' if passed else 'FAIL'}"
            if not passed:
                line += f"  witness={self.witnesses.get(name)!r}"
            lines.append(line)
        return lines


def intersection_stats(cycles: Sequence[Cycle]) -> tuple[list[list[int]], list[int]]:
    """``mu[i][j]`` = edges shared by cycles i and j; ``sigma[i]`` = number of
    other cycles sharing at least one edge with cycle i."""
    t = len(cycles)
    mu = [[0] * t for _ in range(t)]
    owner: dict[tuple[int, int], list[int]] = {}
    for i, c in enumerate(cycles):
        for e in cycle_edges(c):
            owner.setdefault(e, []).append(i)
    for ids in owner.values():
        for a in ids:
            for b in ids:
                if a != b:
                    mu[a][b] += 1
    sigma = [sum(1 for j in range(t) if mu[i][j] > 0) for i in range(t)]
    return mu, sigma


def verify_6cdc(g: Graph, cycles: Sequence[Sequence[int]]) -> CdcReport:
    """Check a proposed 6-CDC. Stops at the first failing check.

    Raises :class:`CdcError` if the host is not cubic or a listed cycle is not
    a 6-cycle of the host.
    """
    if not g.is_cubic():
        raise CdcError("host graph is not cubic")
    cyc = [tuple(c) for c in cycles]
    for c in cyc:
        if len(c) != 6 or len(set(c)) != 6 or not all(0 <= v < g.n for v in c):
            raise CdcError(f"{c} is not a 6-cycle of the host")
        if not all(g.has_edge(u, v) for u, v in cycle_edges(c)):
            raise CdcError(f"{c} is not a 6-cycle of the host")
    rep = CdcReport()

    cover: dict[tuple[int, int], int] = {e: 0 for e in g.edges()}
    for c in cyc:
        for e in cycle_edges(c):
            cover[e] += 1
    bad = [e for e, k in cover.items() if k != 2]
    if bad:
        rep.fail("edge-coverage", (bad[0], cover[bad[0]]))
        return rep
    rep.checks["edge-coverage"] = True

    if 2 * len(cyc) != g.n:
        rep.fail("cycle-count", (len(cyc), g.n // 2))
        return rep
    rep.checks["cycle-count"] = True

    # no two cycles share a 2-edge path
    seen_paths: dict[tuple[int, int, int], int] = {}
    for i, c in enumerate(cyc):
        for k in range(6):
            a, b, d = c[k - 1], c[k], c[(k + 1) % 6]
            key = (min(a, d), b, max(a, d))
            if key in seen_paths:
                rep.fail("no-shared-path", (seen_paths[key], i, key))
                return rep
            seen_paths[key] = i
    rep.checks["no-shared-path"] = True

    through = [set() for _ in range(g.n)]
    for i, c in enumerate(cyc):
        for v in c:
            through[v].add(i)
    bad_v = [v for v in range(g.n) if len(through[v]) != 3]
    if bad_v:
        rep.fail("three-per-vertex", (bad_v[0], sorted(through[bad_v[0]])))
        return rep
    rep.checks["three-per-vertex"] = True

    mu, sigma = intersection_stats(cyc)
    rep.mu, rep.sigma = mu, sigma
    bad_mu = [(i, j) for i in range(len(cyc)) for j in range(len(cyc)) if not 0 <= mu[i][j] <= 3]
    if bad_mu:
        rep.fail("mu-bounds", bad_mu[0])
        return rep
    rep.checks["mu-bounds"] = True
    bad_s = [i for i, s in enumerate(sigma) if not 2 <= s <= 6]
    if bad_s:
        rep.fail("sigma-bounds", bad_s[0])
        return rep
    rep.checks["sigma-bounds"] = True
    return rep


def find_6cdc(g: Graph, mode: str = "first", hexagons: Sequence[Cycle] | None = None) -> list[CDC]:
    """Exhaustive search for 6-CDCs; ``mode`` is ``"first"`` or ``"all"``."""
    if mode not in ("first", "all"):
        raise ValueError(f"unknown mode {mode!r}")
    if not g.is_cubic() or g.n % 2 or not is_connected(g):
        return []
    hexes = list(enumerate_cycles(g, 6) if hexagons is None else hexagons)
    index = {e: i for i, e in enumerate(g.edges())}
    rows = [tuple(index[e] for e in cycle_edges(h)) for h in hexes]
    sols = kernels.exact_cover2(len(index), rows, mode == "all")
    out = sorted((CDC.of(hexes[r] for r in sol) for sol in sols), key=lambda c: c.cycles)
    return out


def has_6cdc(g: Graph) -> bool:
    return bool(find_6cdc(g, "first"))


# ---------------------------------------------------------------------------
# structure theorems
# ---------------------------------------------------------------------------


@dataclass
class TheoremReport:
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def check_structure_theorems(g: Graph, cdc: CDC) -> TheoremReport:
    """(a) some mu = 3 implies g is M_6 or T_{6,2}; (b) girth >= 5 iff every
    sigma is 6; (c) some sigma < 6 implies girth < 5."""
    from .canon import are_isomorphic
    from .circulant import mobius_ladder, torus_2layer

    rep = TheoremReport()
    mu, sigma = intersection_stats(cdc.cycles)
    t = len(cdc.cycles)
    triple = [(i, j) for i in range(t) for j in range(i + 1, t) if mu[i][j] == 3]
    if triple:
        ok = are_isomorphic(g, mobius_ladder(6)) or are_isomorphic(g, torus_2layer(6))
        rep.checks["mu3-characterization"] = ok
        if not ok:
            rep.witnesses["mu3-characterization"] = triple[0]
    else:
        rep.checks["mu3-characterization"] = True
    gi = girth(g)
    all6 = all(s == 6 for s in sigma)
    rep.checks["girth-sigma-iff"] = (gi >= 5) == all6
    if not rep.checks["girth-sigma-iff"]:
        rep.witnesses["girth-sigma-iff"] = (gi, sigma)
    low = [i for i, s in enumerate(sigma) if s < 6]
    rep.checks["low-sigma-short-girth"] = not low or gi < 5
    if not rep.checks["low-sigma-short-girth"]:
        rep.witnesses["low-sigma-short-girth"] = (low[0], gi)
    return rep


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def format_cdc(g: Graph, cdc: CDC) -> str:
    """``n m t`` header, then one normalized cycle per line."""
    lines = [f"{g.n} {g.m} {len(cdc.cycles)}"]
    lines.extend(" ".join(map(str, c)) for c in cdc.cycles)
    return "\n".join(lines) + "\n"


def parse_cdc(text: str) -> tuple[tuple[int, int, int], CDC]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CdcError("empty CDC block")
    head = lines[0].split(" ")
    if len(head) != 3 or not all(h.isdigit() for h in head):
        raise CdcError(f"bad CDC header {lines[0]!r}")
    n, m, t = map(int, head)
    body = lines[1:]
    if len(body) != t:
        raise CdcError(f"header announces {t} cycles, found {len(body)}")
    cycles = []
    for line in body:
        parts = line.split(" ")
        if len(parts) != 6 or not all(p.isdigit() for p in parts):
            raise CdcError(f"bad cycle line {line!r}")
        cycles.append(tuple(map(int, parts)))
    return (n, m, t), CDC(tuple(cycles))

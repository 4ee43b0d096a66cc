"""Canonical forms and isomorphism tests."""

from __future__ import annotations

from typing import Sequence

from . import kernels
from .graph import Graph


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[bytes, list[int]]:
    """Return ``(certificate, lab)``; ``lab[v]`` is v's canonical position."""
    cols = [0] * g.n if colors is None else list(colors)
    return kernels.canon_label([list(a) for a in g.adj], cols)


def canonical_form(g: Graph) -> bytes:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, lab = canonical_labeling(g)
    return g.relabel(lab)


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A vertex map ``phi`` with ``uv in E(g) <=> phi[u]phi[v] in E(h)``, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    cg, lg = canonical_labeling(g)
    ch, lh = canonical_labeling(h)
    if cg != ch:
        return None
    inv_h = [0] * h.n
    for v, c in enumerate(lh):
        inv_h[c] = v
    phi = [inv_h[lg[v]] for v in range(g.n)]
    for u, v in g.edges():
        if not h.has_edge(phi[u], phi[v]):
            raise AssertionError("canonical labeling produced a non-isomorphism")
    return phi


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def general_canonical_labeling(adj: Sequence[Sequence[int]], colors: Sequence[int]) -> tuple[bytes, list[int]]:
    """Canonical labeling for arbitrary-degree coloured graphs (no degree cap)."""
    return kernels.canon_label([list(a) for a in adj], list(colors))

import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexcover import _kernels_py, kernels
from hexcover.graph import cycle_edges, enumerate_cycles
from hexcover.named import heawood, petersen

compiled = pytest.importorskip("hexcover._kernels")


@st.composite
def cubic_like(draw, max_n=12):
    """Random graphs of maximum degree 3, given as adjacency lists."""
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n // 2))
    adj = [[] for _ in range(n)]
    for u, v in chosen:
        if len(adj[u]) < 3 and len(adj[v]) < 3:
            adj[u].append(v)
            adj[v].append(u)
    return [sorted(a) for a in adj]


def test_dispatch_prefers_compiled():
    assert kernels.IMPLEMENTATION == "compiled"


def test_pure_python_switch():
    out = subprocess.run(
        [sys.executable, "-c", "from hexcover import kernels; print(kernels.IMPLEMENTATION)"],
        capture_output=True, text=True, env={"HEXCOVER_PURE_PYTHON": "1", "PATH": ""}, check=True,
    )
    assert out.stdout.strip() == "python"


@settings(max_examples=150)
@given(cubic_like(), st.data())
def test_canon_label_agrees(adj, data):
    colors = data.draw(st.lists(st.integers(0, 2), min_size=len(adj), max_size=len(adj)))
    assert compiled.canon_label(adj, colors) == _kernels_py.canon_label(adj, colors)


@settings(max_examples=150)
@given(cubic_like(max_n=9), st.integers(0, 4))
def test_ham_cycles_agree(adj, limit):
    assert compiled.ham_cycles(adj, limit) == _kernels_py.ham_cycles(adj, limit)


def hexagon_rows(g):
    index = {e: i for i, e in enumerate(g.edges())}
    return len(index), [tuple(index[e] for e in cycle_edges(h)) for h in enumerate_cycles(g, 6)]


@pytest.mark.parametrize("g", [heawood(), petersen()], ids=["heawood", "petersen"])
@pytest.mark.parametrize("find_all", [False, True])
def test_exact_cover_agrees_on_hexagons(g, find_all):
    m, rows = hexagon_rows(g)
    assert compiled.exact_cover2(m, rows, find_all) == _kernels_py.exact_cover2(m, rows, find_all)


@settings(max_examples=150)
@given(st.integers(1, 6).flatmap(lambda m: st.tuples(
    st.just(m),
    st.lists(st.lists(st.integers(0, m - 1), min_size=1, max_size=m, unique=True).map(tuple), max_size=10),
)), st.booleans())
def test_exact_cover_agrees_random(instance, find_all):
    m, rows = instance
    expected = _kernels_py.exact_cover2(m, rows, find_all)
    assert compiled.exact_cover2(m, rows, find_all) == expected
    for sol in expected:
        counts = [0] * m
        for r in sol:
            for c in rows[r]:
                counts[c] += 1
        assert counts == [2] * m

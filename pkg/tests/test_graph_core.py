import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexcover.canon import are_isomorphic, canonical_form, canonical_graph, find_isomorphism
from hexcover.embed import find_subgraph_embeddings
from hexcover.graph import (
    GraphError,
    build_graph,
    cycle_graph,
    deficiency,
    enumerate_cycles,
    girth,
    is_connected,
    normalize_cycle,
)
from hexcover.graph6 import Graph6Error, decode_graph6, encode_graph6
from hexcover.named import complete_graph_k4, heawood, k33, petersen, prism


@st.composite
def subcubic_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n // 2)) if pairs else []
    deg = [0] * n
    edges = []
    for u, v in chosen:
        if deg[u] < 3 and deg[v] < 3:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
    return build_graph(n, edges)


def permuted(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    return g.relabel(perm)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


NAMED = {"K4": complete_graph_k4, "K33": k33, "prism": prism, "Petersen": petersen, "Heawood": heawood}


@pytest.mark.parametrize("name,expected", [("K4", 3), ("K33", 4), ("prism", 3), ("Petersen", 5), ("Heawood", 6)])
def test_named_girth(name, expected):
    g = NAMED[name]()
    assert g.is_cubic() and is_connected(g)
    assert girth(g) == expected


def test_forest_has_infinite_girth():
    assert girth(build_graph(4, [(0, 1), (1, 2), (2, 3)])) == float("inf")


@pytest.mark.parametrize("edges,reason", [
    ([(0, 0)], "self-loop"),
    ([(0, 1), (1, 0)], "duplicate-edge"),
    ([(0, 5)], "vertex-out-of-range"),
    ([(0, 1), (0, 2), (0, 3), (0, 4)], "degree-exceeded"),
])
def test_build_graph_rejects(edges, reason):
    with pytest.raises(GraphError) as exc:
        build_graph(5, edges)
    assert exc.value.reason == reason


@given(subcubic_graphs())
def test_graph6_roundtrip_and_networkx_agree(g):
    code = encode_graph6(g)
    assert encode_graph6(decode_graph6(code)) == code
    assert decode_graph6(code) == build_graph(g.n, g.edges())
    assert nx.to_graph6_bytes(to_nx(g), header=False).rstrip(b"\n") == code


@pytest.mark.parametrize("bad", ["", "A!", "B~", "E{Sw?", "Bx"])
def test_graph6_rejects(bad):
    with pytest.raises(Graph6Error):
        decode_graph6(bad)


@given(subcubic_graphs())
def test_girth_matches_networkx(g):
    expected = nx.girth(to_nx(g))
    assert girth(g) == expected


@given(subcubic_graphs(max_n=9), st.integers(3, 6))
def test_cycle_enumeration_matches_networkx(g, k):
    ours = set(enumerate_cycles(g, k))
    theirs = {normalize_cycle(c) for c in nx.simple_cycles(to_nx(g), length_bound=k) if len(c) == k}
    assert ours == theirs


@settings(max_examples=60)
@given(subcubic_graphs(), st.data())
def test_canonical_form_is_invariant(g, data):
    h = permuted(g, data)
    assert canonical_form(g) == canonical_form(h)
    assert canonical_graph(g) == canonical_graph(h)
    phi = find_isomorphism(g, h)
    assert phi is not None
    assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edges())


@settings(max_examples=60)
@given(subcubic_graphs(max_n=8), subcubic_graphs(max_n=8))
def test_isomorphism_matches_networkx(g, h):
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_non_isomorphic_pairs():
    assert not are_isomorphic(petersen(), prism())
    assert find_isomorphism(k33(), prism()) is None


@given(subcubic_graphs(max_n=8))
def test_deficiency(g):
    assert deficiency(g) == 3 * g.n - 2 * g.m


def test_embeddings_of_hexagon_in_heawood():
    # 28 hexagons, 12 maps each (6 rotations, 2 directions)
    embs = find_subgraph_embeddings(heawood(), cycle_graph(6))
    assert len(embs) == 28 * 12
    assert len(set(embs)) == len(embs)


def test_embedding_limit():
    assert len(find_subgraph_embeddings(petersen(), cycle_graph(5), limit=3)) == 3
    assert find_subgraph_embeddings(prism(), cycle_graph(8)) == []

from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexcover.cdc import CDC, CdcError, check_structure_theorems, find_6cdc, format_cdc, parse_cdc, verify_6cdc
from hexcover.circulant import mobius_ladder, torus_2layer
from hexcover.graph import cycle_edges, enumerate_cycles
from hexcover.named import complete_graph_k4, heawood, k33, petersen, prism


def brute_force_6cdcs(g):
    """All sets of n/2 hexagons covering each edge twice, by plain subsets."""
    hexes = enumerate_cycles(g, 6)
    out = []
    for combo in combinations(hexes, g.n // 2):
        cover = Counter(e for h in combo for e in cycle_edges(h))
        if len(cover) == g.m and all(k == 2 for k in cover.values()):
            out.append(tuple(sorted(combo)))
    return sorted(out)


SMALL = [prism(), k33(), complete_graph_k4(), mobius_ladder(8), torus_2layer(8), petersen(), torus_2layer(10), mobius_ladder(10)]


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}m{g.m}")
def test_find_all_matches_brute_force(g):
    ours = sorted(c.cycles for c in find_6cdc(g, "all"))
    assert ours == brute_force_6cdcs(g)


def test_known_answers():
    assert find_6cdc(petersen()) == []
    assert find_6cdc(complete_graph_k4()) == []
    assert len(find_6cdc(prism())) == 1
    assert find_6cdc(heawood())


def test_find_rejects_unknown_mode():
    with pytest.raises(ValueError):
        find_6cdc(prism(), "some")


@pytest.mark.parametrize("g", [prism(), heawood(), mobius_ladder(6), torus_2layer(12)], ids=lambda g: f"n{g.n}")
def test_verify_every_found_cover(g):
    for cdc in find_6cdc(g, "all"):
        rep = verify_6cdc(g, cdc.cycles)
        assert rep.ok, rep.table()
        assert check_structure_theorems(g, cdc).ok


def test_verify_reports_first_failure():
    cdc = find_6cdc(prism())[0]
    rep = verify_6cdc(prism(), cdc.cycles[:2])
    assert not rep.ok and rep.checks == {"edge-coverage": False}
    assert "edge-coverage" in rep.witnesses


def test_verify_rejects_non_cycles():
    with pytest.raises(CdcError):
        verify_6cdc(prism(), [(0, 1, 2, 3, 4, 5), (0, 1, 2)])
    with pytest.raises(CdcError):
        verify_6cdc(petersen(), [(0, 1, 2, 3, 4, 9)])


def test_mu3_only_on_small_pair():
    for g in (mobius_ladder(6), torus_2layer(6)):
        rep = verify_6cdc(g, find_6cdc(g)[0].cycles)
        assert max(max(r) for r in rep.mu) == 3
    rep = verify_6cdc(heawood(), find_6cdc(heawood())[0].cycles)
    assert set(rep.sigma) == {6}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([prism(), heawood(), mobius_ladder(10), torus_2layer(10)]), st.data())
def test_relabeling_preserves_covers(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = g.relabel(perm)
    ours = {tuple(sorted(tuple(sorted(perm[v] for v in c)) for c in x.cycles)) for x in find_6cdc(g, "all")}
    theirs = {tuple(sorted(tuple(sorted(c)) for c in x.cycles)) for x in find_6cdc(h, "all")}
    assert ours == theirs


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([prism(), heawood(), mobius_ladder(12), torus_2layer(8)]), st.data())
def test_cdc_text_roundtrip(g, data):
    covers = find_6cdc(g, "all")
    cdc = data.draw(st.sampled_from(covers)).renumbered()
    text = format_cdc(g, cdc)
    (n, m, t), back = parse_cdc(text)
    assert (n, m, t) == (g.n, g.m, g.n // 2)
    assert back == cdc
    assert format_cdc(g, back) == text


def test_cdc_normalizes_cycles():
    a = CDC.of([(3, 4, 5, 0, 1, 2)])
    b = CDC.of([(0, 5, 4, 3, 2, 1)])
    assert a == b


@pytest.mark.parametrize("text", ["", "6 9\n", "6 9 2\n0 1 2 3 4 5\n", "x y z\n"])
def test_parse_cdc_rejects(text):
    with pytest.raises(CdcError):
        parse_cdc(text)

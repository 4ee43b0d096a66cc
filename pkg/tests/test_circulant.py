import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexcover.canon import are_isomorphic
from hexcover.cdc import has_6cdc
from hexcover.circulant import (
    CirculantSpec,
    MCSDLabeling,
    circulant,
    find_mcsd,
    mobius_ladder,
    torus_2layer,
    verify_mcsd,
    verify_theorem2,
)
from hexcover.graph import girth, is_connected
from hexcover.named import complete_graph_k4, k33, prism


def test_small_identifications():
    assert are_isomorphic(mobius_ladder(4), complete_graph_k4())
    assert are_isomorphic(mobius_ladder(6), k33())
    assert are_isomorphic(torus_2layer(6), prism())


@pytest.mark.parametrize("n", range(6, 24, 2))
def test_families_are_cubic_and_connected(n):
    for g in (mobius_ladder(n), torus_2layer(n)):
        assert g.n == n and g.is_cubic() and is_connected(g)
        assert girth(g) == (3 if n == 6 and g == torus_2layer(6) else 4)


@pytest.mark.parametrize("n", [8, 10, 12, 14, 16])
def test_mobius_ladder_is_circulant(n):
    c = circulant(CirculantSpec(n, 1))
    assert c.connected and are_isomorphic(c.graph, mobius_ladder(n))


@pytest.mark.parametrize("n", [10, 14, 18])
def test_odd_half_torus_is_circulant(n):
    assert are_isomorphic(circulant(CirculantSpec(n, 2)).graph, torus_2layer(n))


@pytest.mark.parametrize("n,s", [(7, 1), (8, 0), (8, 4), (2, 1)])
def test_bad_circulant_specs(n, s):
    with pytest.raises(ValueError):
        CirculantSpec(n, s)


def test_disconnected_circulant_is_flagged():
    assert not circulant(CirculantSpec(12, 2)).connected


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([6, 8, 10, 12, 14]), st.data())
def test_mcsd_of_relabeled_mobius_ladder(n, data):
    perm = data.draw(st.permutations(range(n)))
    g = mobius_ladder(n).relabel(perm)
    lab = find_mcsd(g)
    assert lab is not None and verify_mcsd(g, lab)
    assert len(lab.distinct()) == 3


def test_mcsd_format():
    lab = find_mcsd(mobius_ladder(6))
    lines = lab.format().splitlines()
    assert lines[0].split() == [str(v) for v in lab.order]
    assert len(lines) == 1 + 9
    u, v, d = map(int, lines[1].split())
    assert (u, v, d) in {tuple(x) for x in lab.labels}


def test_verify_mcsd_rejects_wrong_labels():
    g = mobius_ladder(6)
    lab = find_mcsd(g)
    bad = MCSDLabeling(lab.n, lab.order, tuple((u, v, (d + 1) % 6) for u, v, d in lab.labels))
    assert not verify_mcsd(g, bad)


def test_no_mcsd_for_petersen():
    from hexcover.named import petersen

    assert find_mcsd(petersen()) is None


def test_k4_is_the_only_family_member_without_6cdc():
    assert not has_6cdc(mobius_ladder(4))
    assert all(has_6cdc(mobius_ladder(n)) and has_6cdc(torus_2layer(n)) for n in range(6, 21, 2))


def test_theorem2_small(catalog):
    rep = verify_theorem2(16, catalog)
    assert rep.ok, rep.table()
    assert all(r.in_stream for r in rep.rows if r.n > 4)
